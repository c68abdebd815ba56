#pragma once

// Dense exact linear algebra on top of Eigen. Everything here is a thin
// free-function layer over Eigen decompositions instantiated at an exact
// scalar, so every solve and determinant is a field computation with no
// rounding.

#include "picard/rational.hpp"

#include <Eigen/Dense>

#include <vector>

namespace picard {

using MatX = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecX = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

template <typename DerivedA, typename DerivedB>
bool exact_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <typename Derived>
bool exact_zero(const Eigen::MatrixBase<Derived>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != 0) return false;
  return true;
}

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < j; ++i)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

inline Rat exact_det(const MatX& m) {
  if (m.rows() != m.cols()) throw Error("exact_det: matrix not square");
  if (m.rows() == 0) return 1;
  return m.fullPivLu().determinant();
}

// x with A x = b; A must be invertible.
inline VecX exact_solve(const MatX& a, const VecX& b) {
  Eigen::FullPivLU<MatX> lu(a);
  if (!lu.isInvertible()) throw Error("exact_solve: singular system");
  return lu.solve(b);
}

// Leading-principal-minor test: negative definite iff det(M_k) has sign
// (-1)^k for every k. A zero minor means not definite.
inline bool negative_definite(const MatX& m) {
  if (!is_symmetric(m)) throw Error("negative_definite: matrix not symmetric");
  const Eigen::Index n = m.rows();
  for (Eigen::Index k = 1; k <= n; ++k) {
    const Rat d = exact_det(MatX(m.topLeftCorner(k, k)));
    if (k % 2 == 1 ? d >= 0 : d <= 0) return false;
  }
  return true;
}

// v^T m w, exact.
inline Rat bilinear(const MatX& m, const VecX& v, const VecX& w) {
  if (v.size() != m.rows() || w.size() != m.cols())
    throw Error("bilinear: dimension mismatch");
  return (v.transpose() * m * w).value();
}

// Least common denominator of a coefficient vector (1 for the empty one).
inline Int common_denominator(const VecX& v) {
  Int l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm(l, v(i).get_den());
  return l;
}

inline bool integral(const VecX& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_integer(v(i))) return false;
  return true;
}

}  // namespace picard
