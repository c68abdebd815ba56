#include "picard/abelian.hpp"

#include <sstream>

namespace picard {

AbelianGroup::AbelianGroup(int rank, std::vector<Int> orders)
    : free_rank(rank), torsion_orders(std::move(orders)) {
  if (free_rank < 0) throw Error("AbelianGroup: negative free rank");
  for (const Int& n : torsion_orders)
    if (n < 2) throw Error("AbelianGroup: torsion order " + to_string(n) + " < 2");
}

GroupPtr make_group(int free_rank, std::vector<Int> torsion_orders) {
  return std::make_shared<AbelianGroup>(free_rank, std::move(torsion_orders));
}

GroupElement::GroupElement(GroupPtr group, std::vector<Int> free_coords,
                           std::vector<Int> torsion_coords)
    : group_(std::move(group)), free_(std::move(free_coords)), torsion_(std::move(torsion_coords)) {
  if (!group_) throw Error("GroupElement: null group");
  if (free_.size() != static_cast<size_t>(group_->free_rank))
    throw Error("GroupElement: free coordinate count does not match group rank");
  if (torsion_.size() != group_->torsion_orders.size())
    throw Error("GroupElement: torsion coordinate count does not match group");
  reduce();
}

GroupElement GroupElement::identity(GroupPtr group) {
  if (!group) throw Error("GroupElement: null group");
  std::vector<Int> f(group->free_rank, 0);
  std::vector<Int> t(group->torsion_orders.size(), 0);
  return GroupElement(std::move(group), std::move(f), std::move(t));
}

void GroupElement::reduce() {
  for (size_t j = 0; j < torsion_.size(); ++j) {
    const Int& n = group_->torsion_orders[j];
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), torsion_[j].get_mpz_t(), n.get_mpz_t());
    torsion_[j] = r;
  }
}

bool GroupElement::is_identity() const {
  for (const Int& c : free_)
    if (c != 0) return false;
  for (const Int& c : torsion_)
    if (c != 0) return false;
  return true;
}

bool GroupElement::has_free_part() const {
  for (const Int& c : free_)
    if (c != 0) return true;
  return false;
}

void GroupElement::check_same_group(const GroupElement& a, const GroupElement& b) {
  if (a.group_ != b.group_) throw Error("GroupElement: elements of different groups");
}

GroupElement GroupElement::operator+(const GroupElement& rhs) const {
  check_same_group(*this, rhs);
  std::vector<Int> f(free_), t(torsion_);
  for (size_t i = 0; i < f.size(); ++i) f[i] += rhs.free_[i];
  for (size_t j = 0; j < t.size(); ++j) t[j] += rhs.torsion_[j];
  return GroupElement(group_, std::move(f), std::move(t));
}

GroupElement GroupElement::operator-() const {
  std::vector<Int> f(free_), t(torsion_);
  for (Int& c : f) c = -c;
  for (Int& c : t) c = -c;
  return GroupElement(group_, std::move(f), std::move(t));
}

GroupElement GroupElement::operator-(const GroupElement& rhs) const { return *this + (-rhs); }

GroupElement operator*(const Int& scalar, const GroupElement& x) {
  std::vector<Int> f(x.free_), t(x.torsion_);
  for (Int& c : f) c *= scalar;
  for (Int& c : t) c *= scalar;
  return GroupElement(x.group_, std::move(f), std::move(t));
}

bool GroupElement::operator==(const GroupElement& rhs) const {
  check_same_group(*this, rhs);
  return free_ == rhs.free_ && torsion_ == rhs.torsion_;
}

std::string GroupElement::str() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const Int& c : free_) {
    if (!first) os << ",";
    os << c.get_str();
    first = false;
  }
  for (size_t j = 0; j < torsion_.size(); ++j) {
    if (!first) os << ",";
    os << torsion_[j].get_str() << " mod " << group_->torsion_orders[j].get_str();
    first = false;
  }
  os << ")";
  return os.str();
}

std::optional<Int> order(const GroupElement& x) {
  if (x.has_free_part()) return std::nullopt;
  // order of c in Z/n is n / gcd(c, n); total order is the lcm over factors
  Int m = 1;
  const auto& orders = x.group()->torsion_orders;
  for (size_t j = 0; j < orders.size(); ++j) {
    const Int g = gcd(x.torsion_coords()[j], orders[j]);
    m = lcm(m, Int(orders[j] / g));
  }
  return m;
}

std::string to_string(const std::optional<Int>& order_or_infinite) {
  return order_or_infinite ? order_or_infinite->get_str() : std::string("infinite");
}

}  // namespace picard
