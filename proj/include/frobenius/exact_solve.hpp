#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "frobenius/numeric.hpp"

namespace frob {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using RationalMatrix = Matrix<Rational>;
using RationalRow = RowVector<Rational>;

namespace detail {

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace detail

/// Solves A X = B for square nonsingular A over the rationals.
///
/// Each row of [A | B] is scaled to integers, the augmented system is reduced
/// to upper-triangular form with Bareiss' fraction-free elimination (every
/// intermediate entry stays an exact integer), and X is recovered by rational
/// back substitution. Throws PreconditionError if A is singular or the shapes
/// do not match.
template <class DerivedA, class DerivedB>
RationalMatrix solve_exact(const Eigen::MatrixBase<DerivedA>& a,
                           const Eigen::MatrixBase<DerivedB>& b) {
  static_assert(std::is_same_v<typename DerivedA::Scalar, Rational>);
  static_assert(std::is_same_v<typename DerivedB::Scalar, Rational>);
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.rows() != n)
    throw PreconditionError("solve_exact: shape mismatch");
  const Eigen::Index k = b.cols();

  Matrix<BigInt> aug(n, n + k);
  for (Eigen::Index i = 0; i < n; ++i) {
    BigInt scale = 1;
    for (Eigen::Index j = 0; j < n; ++j)
      scale = detail::lcm(scale, denominator(a(i, j)));
    for (Eigen::Index j = 0; j < k; ++j)
      scale = detail::lcm(scale, denominator(b(i, j)));
    for (Eigen::Index j = 0; j < n; ++j)
      aug(i, j) = numerator(a(i, j)) * (scale / denominator(a(i, j)));
    for (Eigen::Index j = 0; j < k; ++j)
      aug(i, n + j) = numerator(b(i, j)) * (scale / denominator(b(i, j)));
  }

  BigInt prev_pivot = 1;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && aug(pivot, col) == 0) ++pivot;
    if (pivot == n) throw PreconditionError("solve_exact: singular matrix");
    if (pivot != col) aug.row(pivot).swap(aug.row(col));
    for (Eigen::Index i = col + 1; i < n; ++i) {
      for (Eigen::Index j = col + 1; j < n + k; ++j)
        aug(i, j) = (aug(col, col) * aug(i, j) - aug(i, col) * aug(col, j)) /
                    prev_pivot;
      aug(i, col) = 0;
    }
    prev_pivot = aug(col, col);
  }

  RationalMatrix x(n, k);
  for (Eigen::Index c = 0; c < k; ++c) {
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      Rational acc(aug(i, n + c));
      for (Eigen::Index j = i + 1; j < n; ++j) acc -= Rational(aug(i, j)) * x(j, c);
      x(i, c) = acc / Rational(aug(i, i));
    }
  }
  return x;
}

}  // namespace frob
