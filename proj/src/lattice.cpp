#include "picard/lattice.hpp"

#include <atomic>
#include <sstream>

namespace picard {

namespace {
std::atomic<long> next_surface_id{1};
}

// ---------------------------------------------------------------- DivisorClass

DivisorClass::DivisorClass(SurfacePtr surface, VecX coeffs)
    : surface_(std::move(surface)), coeffs_(std::move(coeffs)) {
  if (!surface_) throw Error("DivisorClass: null surface");
  if (coeffs_.size() != surface_->rank())
    throw Error("DivisorClass: coefficient vector has wrong length");
}

Rat DivisorClass::coeff(const std::string& label) const {
  return coeffs_(surface_->index_of(label));
}

void DivisorClass::check_same_surface(const DivisorClass& a, const DivisorClass& b) {
  if (a.surface_ != b.surface_)
    throw Error("divisor classes live on different surfaces (#" +
                std::to_string(a.surface_->id()) + " vs #" + std::to_string(b.surface_->id()) + ")");
}

DivisorClass DivisorClass::operator+(const DivisorClass& rhs) const {
  check_same_surface(*this, rhs);
  return DivisorClass(surface_, coeffs_ + rhs.coeffs_);
}

DivisorClass DivisorClass::operator-(const DivisorClass& rhs) const {
  check_same_surface(*this, rhs);
  return DivisorClass(surface_, coeffs_ - rhs.coeffs_);
}

DivisorClass DivisorClass::operator-() const { return DivisorClass(surface_, VecX(-coeffs_)); }

DivisorClass operator*(const Rat& scalar, const DivisorClass& d) {
  return DivisorClass(d.surface_, VecX(scalar * d.coeffs_));
}

bool DivisorClass::operator==(const DivisorClass& rhs) const {
  return surface_ == rhs.surface_ && exact_equal(coeffs_, rhs.coeffs_);
}

std::string DivisorClass::str() const {
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_(i);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const Rat a = abs(c);
    if (a != 1) os << to_string(a) << "*";
    os << surface_->label(i).name;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// ----------------------------------------------------------------- MarkedCurve

MarkedCurve::MarkedCurve(std::string name, VecX coeffs, int genus, std::optional<Int> plane_degree,
                         std::optional<CurveRestriction> restriction)
    : name_(std::move(name)),
      coeffs_(std::move(coeffs)),
      genus_(genus),
      plane_degree_(std::move(plane_degree)),
      restriction_(std::move(restriction)) {
  if (name_.empty()) throw Error("MarkedCurve: empty name");
  if (genus_ != 0 && genus_ != 1) throw Error("MarkedCurve '" + name_ + "': genus must be 0 or 1");
  if (restriction_ && genus_ != 1)
    throw Error("MarkedCurve '" + name_ + "': restriction data requires genus 1");
  if (plane_degree_ && *plane_degree_ <= 0)
    throw Error("MarkedCurve '" + name_ + "': plane degree must be positive");
}

// -------------------------------------------------------------- SurfaceLattice

SurfacePtr SurfaceLattice::finish(SurfaceLattice&& s, bool validate_marked) {
  if (!is_symmetric(s.gram_)) throw Error("SurfaceLattice: Gram matrix not symmetric");
  if (s.canonical_.size() != s.gram_.rows())
    throw Error("SurfaceLattice: canonical class has wrong length");
  s.index_.clear();
  for (size_t i = 0; i < s.basis_.size(); ++i) {
    if (s.basis_[i].name.empty()) throw Error("SurfaceLattice: empty basis label");
    if (!s.index_.emplace(s.basis_[i].name, static_cast<Eigen::Index>(i)).second)
      throw Error("SurfaceLattice: duplicate basis label '" + s.basis_[i].name + "'");
  }
  for (const MarkedCurve& c : s.marked_) {
    if (c.coeffs().size() != s.gram_.rows())
      throw Error("MarkedCurve '" + c.name() + "': class has wrong length");
    // On a plane-derived surface the strict transform of a degree-e curve
    // must satisfy C^2 = e^2 - sum of squared multiplicities.
    if (validate_marked && s.base_.kind == BaseSurface::Kind::plane && s.cover_degree_ == 1 &&
        c.plane_degree()) {
      Rat expect = (*c.plane_degree()) * (*c.plane_degree());
      for (const auto& [label, mult] : c.incidences()) expect -= Rat(mult * mult);
      const Rat got = bilinear(s.gram_, c.coeffs(), c.coeffs());
      if (got != expect)
        throw Error("MarkedCurve '" + c.name() + "': self-intersection " + to_string(got) +
                    " does not match degree/multiplicity data (" + to_string(expect) + ")");
    }
  }
  s.id_ = next_surface_id.fetch_add(1);
  return std::make_shared<SurfaceLattice>(std::move(s));
}

SurfacePtr SurfaceLattice::projective_plane() {
  SurfaceLattice s;
  s.basis_ = {{"H", LabelKind::hyperplane}};
  s.gram_ = MatX(1, 1);
  s.gram_(0, 0) = 1;
  s.canonical_ = VecX(1);
  s.canonical_(0) = -3;
  s.base_ = {BaseSurface::Kind::plane, 0, 0};
  return finish(std::move(s));
}

SurfacePtr SurfaceLattice::ruled_surface(const Int& genus, const Int& invariant) {
  if (genus < 0) throw Error("ruled_surface: negative genus");
  if (invariant < 0) throw Error("ruled_surface: negative invariant");
  SurfaceLattice s;
  s.basis_ = {{"Cminus", LabelKind::section}, {"F", LabelKind::fiber}};
  s.gram_ = MatX(2, 2);
  s.gram_ << Rat(-invariant), Rat(1), Rat(1), Rat(0);
  // K = -2 C^- + (2g - 2 - d) F, forced by adjunction on a fiber and on the
  // negative section.
  s.canonical_ = VecX(2);
  s.canonical_(0) = -2;
  s.canonical_(1) = Rat(2 * genus - 2 - invariant);
  s.base_ = {BaseSurface::Kind::ruled, genus, invariant};
  return finish(std::move(s));
}

SurfacePtr SurfaceLattice::custom(std::vector<BasisLabel> basis, MatX gram, VecX canonical) {
  if (static_cast<Eigen::Index>(basis.size()) != gram.rows())
    throw Error("custom: basis/Gram size mismatch");
  SurfaceLattice s;
  s.basis_ = std::move(basis);
  s.gram_ = std::move(gram);
  s.canonical_ = std::move(canonical);
  s.base_ = {BaseSurface::Kind::abstract, 0, 0};
  s.cover_degree_ = 1;
  return finish(std::move(s));
}

bool SurfaceLattice::has_label(const std::string& name) const { return index_.count(name) > 0; }

Eigen::Index SurfaceLattice::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error("unknown basis label '" + name + "'");
  return it->second;
}

DivisorClass SurfaceLattice::make_class(VecX coeffs) const {
  return DivisorClass(shared_from_this(), std::move(coeffs));
}

DivisorClass SurfaceLattice::zero_class() const {
  return make_class(VecX::Zero(rank()));
}

DivisorClass SurfaceLattice::basis_class(const std::string& name) const {
  VecX v = VecX::Zero(rank());
  v(index_of(name)) = 1;
  return make_class(std::move(v));
}

DivisorClass SurfaceLattice::canonical_class() const { return make_class(canonical_); }

bool SurfaceLattice::has_marked(const std::string& name) const {
  for (const MarkedCurve& c : marked_)
    if (c.name() == name) return true;
  return false;
}

const MarkedCurve& SurfaceLattice::marked_curve(const std::string& name) const {
  for (const MarkedCurve& c : marked_)
    if (c.name() == name) return c;
  throw Error("no marked curve '" + name + "'");
}

DivisorClass SurfaceLattice::marked_class(const std::string& name) const {
  return make_class(marked_curve(name).coeffs());
}

DivisorClass SurfaceLattice::curve_class(const std::string& name) const {
  if (has_marked(name)) return marked_class(name);
  if (has_label(name) && label(index_of(name)).kind == LabelKind::exceptional)
    return basis_class(name);
  throw Error("'" + name + "' is neither a marked curve nor an exceptional label");
}

int SurfaceLattice::curve_genus(const std::string& name) const {
  if (has_marked(name)) return marked_curve(name).genus();
  if (has_label(name) && label(index_of(name)).kind == LabelKind::exceptional) return 0;
  throw Error("'" + name + "' is neither a marked curve nor an exceptional label");
}

bool SurfaceLattice::plane_derived() const {
  return base_.kind == BaseSurface::Kind::plane && cover_degree_ == 1;
}

bool SurfaceLattice::ruled_derived() const {
  return base_.kind == BaseSurface::Kind::ruled && cover_degree_ == 1;
}

// ------------------------------------------------------------------ operations

SurfacePtr blow_up(const SurfacePtr& s, const std::string& label,
                   const std::vector<BlowUpIncidence>& incidences) {
  if (!s) throw Error("blow_up: null surface");
  if (s->has_label(label)) throw Error("blow_up: duplicate label '" + label + "'");
  if (s->cover_degree() != 1)
    throw Error("blow_up: centers on a covered surface are not modeled; blow up first, then cover");
  for (const auto& inc : incidences) {
    if (inc.multiplicity < 0)
      throw Error("blow_up: negative multiplicity on curve '" + inc.curve + "'");
    s->marked_curve(inc.curve);  // must exist
  }

  const Eigen::Index n = s->rank();
  SurfaceLattice out;
  out.basis_ = s->basis_;
  out.basis_.push_back({label, LabelKind::exceptional});
  out.gram_ = MatX::Zero(n + 1, n + 1);
  out.gram_.topLeftCorner(n, n) = s->gram_;
  out.gram_(n, n) = -1;
  out.canonical_ = VecX::Zero(n + 1);
  out.canonical_.head(n) = s->canonical_;
  out.canonical_(n) = 1;
  out.base_ = s->base_;
  out.cover_degree_ = s->cover_degree_;
  out.blow_ups_ = s->blow_ups_;

  BlowUpRecord rec{label, {}};
  for (const auto& inc : incidences) rec.incidences.emplace_back(inc.curve, inc.multiplicity);
  out.blow_ups_.push_back(std::move(rec));

  for (const MarkedCurve& c : s->marked_) {
    MarkedCurve moved = c;
    VecX v = VecX::Zero(n + 1);
    v.head(n) = c.coeffs();
    const BlowUpIncidence* hit = nullptr;
    for (const auto& inc : incidences)
      if (inc.curve == c.name()) hit = &inc;
    if (hit && hit->multiplicity > 0) {
      v(n) = Rat(-hit->multiplicity);
      moved.incidences_[label] = hit->multiplicity;
      if (moved.restriction_) {
        GroupElement p = hit->point ? *hit->point : GroupElement::identity(moved.restriction_->group);
        if (p.group() != moved.restriction_->group)
          throw Error("blow_up: point class on '" + c.name() + "' lies in the wrong group");
        moved.restriction_->points.emplace(label, std::move(p));
      }
    } else if (hit && hit->point) {
      throw Error("blow_up: point class given for curve '" + c.name() + "' with multiplicity 0");
    }
    moved.coeffs_ = std::move(v);
    out.marked_.push_back(std::move(moved));
  }
  return SurfaceLattice::finish(std::move(out));
}

SurfacePtr scale_cover(const SurfacePtr& s, const Int& n) {
  if (!s) throw Error("scale_cover: null surface");
  if (n < 1) throw Error("scale_cover: degree must be >= 1");
  SurfaceLattice out;
  out.basis_ = s->basis_;
  out.gram_ = Rat(n) * s->gram_;
  out.canonical_ = s->canonical_;
  out.marked_ = s->marked_;
  out.base_ = s->base_;
  out.blow_ups_ = s->blow_ups_;
  out.cover_degree_ = s->cover_degree_ * n;
  return SurfaceLattice::finish(std::move(out));
}

SurfacePtr with_marked_curve(const SurfacePtr& s, MarkedCurve curve) {
  if (!s) throw Error("with_marked_curve: null surface");
  if (s->has_marked(curve.name()))
    throw Error("with_marked_curve: duplicate curve '" + curve.name() + "'");
  SurfaceLattice out = *s;
  out.marked_.push_back(std::move(curve));
  return SurfaceLattice::finish(std::move(out));
}

SurfacePtr with_canonical(const SurfacePtr& s, const DivisorClass& k) {
  if (!s) throw Error("with_canonical: null surface");
  if (k.surface() != s) throw Error("with_canonical: class lives on a different surface");
  SurfaceLattice out = *s;
  out.canonical_ = k.coeffs();
  return SurfaceLattice::finish(std::move(out));
}

SurfacePtr with_gram_entry(const SurfacePtr& s, Eigen::Index i, Eigen::Index j, const Rat& value) {
  if (!s) throw Error("with_gram_entry: null surface");
  if (i < 0 || j < 0 || i >= s->rank() || j >= s->rank())
    throw Error("with_gram_entry: index out of range");
  SurfaceLattice out = *s;
  out.gram_(i, j) = value;
  out.gram_(j, i) = value;
  return SurfaceLattice::finish(std::move(out), /*validate_marked=*/false);
}

Rat intersect(const DivisorClass& a, const DivisorClass& b) {
  if (a.surface() != b.surface())
    throw Error("intersect: classes live on different surfaces");
  return bilinear(a.surface()->gram(), a.coeffs(), b.coeffs());
}

MatX gram_of(const std::vector<DivisorClass>& classes) {
  if (classes.empty()) throw Error("gram_of: empty class list");
  for (const DivisorClass& c : classes)
    if (c.surface() != classes.front().surface())
      throw Error("gram_of: classes live on different surfaces");
  const auto n = static_cast<Eigen::Index>(classes.size());
  MatX g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = intersect(classes[i], classes[j]);
  return g;
}

bool is_negative_definite(const std::vector<DivisorClass>& classes) {
  return negative_definite(gram_of(classes));
}

}  // namespace picard
