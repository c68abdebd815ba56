#pragma once

// Restriction of divisor classes to a marked genus-one curve, computed from
// declared incidence data rather than from curve geometry.
//
// Normalization: when the curve is embedded in the plane with degree e, the
// hyperplane class restricts to e*p0 where p0 is the group identity (for a
// plane cubic: p0 an inflection point). On a ruled surface the fiber basis
// label is anchored at the fiber through p0. Under these conventions the
// restriction of L is determined by the lattice and the per-point classes:
// the degree is L . C and the degree-zero part accumulates, over each
// exceptional label E_p on the curve, L's E_p-coefficient times the class of
// (p - p0).

#include "picard/lattice.hpp"

#include <optional>
#include <string>

namespace picard {

struct RestrictionClass {
  Rat degree;
  GroupElement element;

  bool trivial() const { return degree == 0 && element.is_identity(); }
};

RestrictionClass restrict_to(const DivisorClass& l, const std::string& curve);
RestrictionClass restrict_to(const DivisorClass& l, const MarkedCurve& curve);

// Least m >= 1 with m*rc trivial; nullopt (never) when the degree is nonzero
// or the element has a free part.
std::optional<Int> triviality_order(const RestrictionClass& rc);

}  // namespace picard
