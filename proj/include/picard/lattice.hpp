#pragma once

// Exact Picard lattices of surfaces built from a base surface by iterated
// blow-ups and finite-cover rescaling.
//
// A SurfaceLattice is immutable once constructed; every operation that
// "changes" a surface returns a new one. Divisor classes are dense exact
// coefficient vectors over the basis of their owning surface. Old basis
// labels on a blown-up surface always denote total transforms (pullbacks);
// strict transforms are tracked separately on the marked curves, so the two
// are never conflated.

#include "picard/abelian.hpp"
#include "picard/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace picard {

enum class LabelKind { hyperplane, fiber, section, exceptional };

struct BasisLabel {
  std::string name;
  LabelKind kind;
};

class SurfaceLattice;
using SurfacePtr = std::shared_ptr<const SurfaceLattice>;

class DivisorClass {
 public:
  DivisorClass(SurfacePtr surface, VecX coeffs);

  const SurfacePtr& surface() const { return surface_; }
  const VecX& coeffs() const { return coeffs_; }
  Rat coeff(const std::string& label) const;

  DivisorClass operator+(const DivisorClass& rhs) const;
  DivisorClass operator-(const DivisorClass& rhs) const;
  DivisorClass operator-() const;
  friend DivisorClass operator*(const Rat& scalar, const DivisorClass& d);
  bool operator==(const DivisorClass& rhs) const;
  bool operator!=(const DivisorClass& rhs) const { return !(*this == rhs); }

  bool is_zero() const { return exact_zero(coeffs_); }
  std::string str() const;

 private:
  static void check_same_surface(const DivisorClass& a, const DivisorClass& b);

  SurfacePtr surface_;
  VecX coeffs_;
};

// Restriction data of a marked genus-one curve: an abstract model of its
// degree-zero divisor class group, plus the class of (p - p0) for each
// blown-up point p on the curve, keyed by the exceptional label over p.
struct CurveRestriction {
  GroupPtr group;
  std::map<std::string, GroupElement> points;
};

class MarkedCurve {
 public:
  MarkedCurve(std::string name, VecX coeffs, int genus,
              std::optional<Int> plane_degree = std::nullopt,
              std::optional<CurveRestriction> restriction = std::nullopt);

  const std::string& name() const { return name_; }
  const VecX& coeffs() const { return coeffs_; }
  int genus() const { return genus_; }
  const std::optional<Int>& plane_degree() const { return plane_degree_; }
  const std::optional<CurveRestriction>& restriction() const { return restriction_; }
  // exceptional label -> multiplicity of the curve at the blown-up point
  const std::map<std::string, Int>& incidences() const { return incidences_; }

 private:
  friend SurfacePtr blow_up(const SurfacePtr&, const std::string&,
                            const std::vector<struct BlowUpIncidence>&);

  std::string name_;
  VecX coeffs_;
  int genus_;
  std::optional<Int> plane_degree_;
  std::optional<CurveRestriction> restriction_;
  std::map<std::string, Int> incidences_;
};

struct BlowUpIncidence {
  std::string curve;                   // marked curve through the point
  Int multiplicity;                    // multiplicity of the curve there, >= 0
  std::optional<GroupElement> point;   // class of (p - p0); identity if omitted
};

struct BaseSurface {
  enum class Kind { plane, ruled, abstract };
  Kind kind = Kind::plane;
  Int genus = 0;      // ruled only
  Int invariant = 0;  // ruled only: -(section)^2
};

struct BlowUpRecord {
  std::string label;
  std::vector<std::pair<std::string, Int>> incidences;
};

class SurfaceLattice : public std::enable_shared_from_this<SurfaceLattice> {
 public:
  static SurfacePtr projective_plane();
  static SurfacePtr ruled_surface(const Int& genus, const Int& invariant);
  // Arbitrary lattice, for experiments and fault injection; gram must be
  // symmetric and canonical must have matching length.
  static SurfacePtr custom(std::vector<BasisLabel> basis, MatX gram, VecX canonical);

  Eigen::Index rank() const { return gram_.rows(); }
  const std::vector<BasisLabel>& basis() const { return basis_; }
  const MatX& gram() const { return gram_; }
  const BaseSurface& base() const { return base_; }
  const std::vector<BlowUpRecord>& blow_ups() const { return blow_ups_; }
  const Int& cover_degree() const { return cover_degree_; }
  long id() const { return id_; }

  bool has_label(const std::string& name) const;
  Eigen::Index index_of(const std::string& name) const;
  const BasisLabel& label(Eigen::Index i) const { return basis_.at(i); }

  DivisorClass make_class(VecX coeffs) const;
  DivisorClass zero_class() const;
  DivisorClass basis_class(const std::string& name) const;
  DivisorClass canonical_class() const;

  const std::vector<MarkedCurve>& marked() const { return marked_; }
  bool has_marked(const std::string& name) const;
  const MarkedCurve& marked_curve(const std::string& name) const;
  DivisorClass marked_class(const std::string& name) const;

  // Marked curve by name, or an exceptional basis label viewed as the
  // corresponding (-1)-curve.
  DivisorClass curve_class(const std::string& name) const;
  int curve_genus(const std::string& name) const;

  bool plane_derived() const;
  bool ruled_derived() const;

 private:
  friend SurfacePtr blow_up(const SurfacePtr&, const std::string&,
                            const std::vector<BlowUpIncidence>&);
  friend SurfacePtr scale_cover(const SurfacePtr&, const Int&);
  friend SurfacePtr with_marked_curve(const SurfacePtr&, MarkedCurve);
  friend SurfacePtr with_canonical(const SurfacePtr&, const DivisorClass&);
  friend SurfacePtr with_gram_entry(const SurfacePtr&, Eigen::Index, Eigen::Index, const Rat&);

  SurfaceLattice() = default;
  static SurfacePtr finish(SurfaceLattice&& s, bool validate_marked = true);

  std::vector<BasisLabel> basis_;
  MatX gram_;
  VecX canonical_;
  std::vector<MarkedCurve> marked_;
  BaseSurface base_;
  std::vector<BlowUpRecord> blow_ups_;
  Int cover_degree_ = 1;
  std::map<std::string, Eigen::Index> index_;
  long id_ = 0;
};

// Blow up a point. The new exceptional class E gets E^2 = -1 and is
// orthogonal to everything older; the canonical class gains +E; each incident
// marked curve C of multiplicity m has its strict transform drop by m*E, and
// a genus-one curve with restriction data records the new point's class
// (identity unless given). Points are always distinct: a label can only be
// blown up once and incidences refer to marked curves, never to exceptional
// configurations over earlier centers.
SurfacePtr blow_up(const SurfacePtr& s, const std::string& label,
                   const std::vector<BlowUpIncidence>& incidences = {});

// Degree-n finite cover, modeled as the rank-preserving rescaling of the
// intersection form by n on pulled-back classes. Ramification corrections to
// the canonical class are the caller's business (see with_canonical).
SurfacePtr scale_cover(const SurfacePtr& s, const Int& n);

SurfacePtr with_marked_curve(const SurfacePtr& s, MarkedCurve curve);
SurfacePtr with_canonical(const SurfacePtr& s, const DivisorClass& k);
// Fault-injection hook for the verification harness: returns a copy with one
// symmetric Gram entry overwritten.
SurfacePtr with_gram_entry(const SurfacePtr& s, Eigen::Index i, Eigen::Index j, const Rat& value);

Rat intersect(const DivisorClass& a, const DivisorClass& b);

MatX gram_of(const std::vector<DivisorClass>& classes);
bool is_negative_definite(const std::vector<DivisorClass>& classes);

}  // namespace picard
