#pragma once

// Finitely generated abelian groups Z^f + Z/n_1 + ... + Z/n_k, used as the
// degree-zero divisor class group of a marked genus-one curve. Elements are
// coordinate vectors; torsion coordinates are kept reduced to [0, n_j).

#include "picard/rational.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace picard {

struct AbelianGroup {
  int free_rank = 0;
  std::vector<Int> torsion_orders;  // each >= 2

  AbelianGroup(int rank, std::vector<Int> orders);
};

using GroupPtr = std::shared_ptr<const AbelianGroup>;

GroupPtr make_group(int free_rank, std::vector<Int> torsion_orders);

class GroupElement {
 public:
  GroupElement(GroupPtr group, std::vector<Int> free_coords, std::vector<Int> torsion_coords);

  static GroupElement identity(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  const std::vector<Int>& free_coords() const { return free_; }
  const std::vector<Int>& torsion_coords() const { return torsion_; }

  bool is_identity() const;
  bool has_free_part() const;

  GroupElement operator+(const GroupElement& rhs) const;
  GroupElement operator-(const GroupElement& rhs) const;
  GroupElement operator-() const;
  bool operator==(const GroupElement& rhs) const;
  bool operator!=(const GroupElement& rhs) const { return !(*this == rhs); }

  friend GroupElement operator*(const Int& scalar, const GroupElement& x);

  std::string str() const;

 private:
  void reduce();
  static void check_same_group(const GroupElement& a, const GroupElement& b);

  GroupPtr group_;
  std::vector<Int> free_;
  std::vector<Int> torsion_;
};

// Smallest m >= 1 with m*x = 0; nullopt when x has a nonzero free coordinate.
std::optional<Int> order(const GroupElement& x);

std::string to_string(const std::optional<Int>& order_or_infinite);

}  // namespace picard
