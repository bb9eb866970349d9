#pragma once

#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "frobenius/exact_solve.hpp"
#include "frobenius/partition.hpp"

namespace frob {

enum class Basis { P, M, H, E, S };

inline constexpr Basis kAllBases[] = {Basis::P, Basis::M, Basis::H, Basis::E,
                                      Basis::S};

/// Lower-case tag used in JSON and on the command line: "p", "m", ...
char basis_tag(Basis b);
/// Accepts a single letter, either case. Throws PreconditionError otherwise.
Basis parse_basis(std::string_view tag);

/// Homogeneous symmetric function of a fixed degree, expanded in one basis.
/// Coefficients are exact and zero coefficients are never stored, so the zero
/// function has no terms.
class SymFunc {
 public:
  using Terms = std::map<Partition, Rational, RevLex>;

  SymFunc(Basis basis, int degree);
  /// Throws PreconditionError if a key does not have weight `degree`.
  SymFunc(Basis basis, int degree, Terms terms);

  /// Infers the degree from the partitions; repeated partitions accumulate.
  /// Throws PreconditionError naming two differing weights if the input is
  /// not homogeneous, or if it is empty (no degree can be inferred).
  static SymFunc from_terms(
      Basis basis, const std::vector<std::pair<Partition, Rational>>& terms);
  /// The basis vector b_lambda.
  static SymFunc basis_element(Basis basis, const Partition& lambda);
  /// Dense coefficients indexed by partitions_of(degree).
  static SymFunc from_coefficients(Basis basis, int degree,
                                   const RationalRow& coefficients);

  Basis basis() const { return basis_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Partition& lambda) const;
  RationalRow coefficients() const;

  /// Identical basis, degree and term mapping (no conversion).
  bool same_terms(const SymFunc& other) const;

  SymFunc& operator+=(const SymFunc& rhs);
  SymFunc& operator-=(const SymFunc& rhs);
  SymFunc& operator*=(const Rational& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(const Rational& c, SymFunc f) { return f *= c; }

  /// Equal as symmetric functions: both sides are taken to the P basis and
  /// compared termwise.
  friend bool operator==(const SymFunc& a, const SymFunc& b);

 private:
  void drop_zeros();

  Basis basis_;
  int degree_;
  Terms terms_;
};

/// Product in the power-sum basis: p_alpha * p_beta = p_{alpha u beta}.
SymFunc power_sum_product(const SymFunc& a, const SymFunc& b);

/// L_{lambda mu}: maps phi from the parts of lambda to the parts of mu whose
/// fibres sum to the target part. Counted by backtracking.
BigInt l_coefficient(const Partition& lambda, const Partition& mu);

/// Same number, summed over sequences (mu^(1), ..., mu^(l)) with
/// mu^(i) |- mu_i that jointly reassemble lambda, each weighted by
/// prod_s multinomial(m_s(lambda); m_s(mu^(1)), ..., m_s(mu^(l))).
BigInt l_via_splitting(const Partition& lambda, const Partition& mu);

/// Rows lambda, columns mu, canonical order: p_lambda = sum_mu L m_mu.
template <class Scalar>
Matrix<Scalar> l_matrix(int n) {
  const auto parts = partitions_of(n);
  const auto p = static_cast<Eigen::Index>(parts.size());
  Matrix<Scalar> out(p, p);
  for (Eigen::Index i = 0; i < p; ++i)
    for (Eigen::Index j = 0; j < p; ++j)
      out(i, j) = Scalar(l_coefficient(parts[static_cast<size_t>(i)],
                                       parts[static_cast<size_t>(j)]));
  return out;
}

/// Row lambda holds the P-expansion of b_lambda for b in {P, H, E, S}.
/// Memoized per (basis, degree). Basis::M is rejected: the M basis is
/// reached by the L matrix and its inverse, see convert().
const RationalMatrix& power_sum_expansion_matrix(Basis basis, int n);

/// Memoized l_matrix<Rational>(n).
const RationalMatrix& cached_l_matrix(int n);

/// sum_lambda c_lambda p_lambda -> sum_mu (sum_lambda c_lambda L) m_mu.
/// Throws PreconditionError if f is not in the P basis.
SymFunc p_to_m(const SymFunc& f);

SymFunc convert(const SymFunc& f, Basis target);

/// <p_lambda, p_mu> = z_lambda delta_{lambda mu}. Throws PreconditionError on
/// a degree mismatch.
Rational inner_product(const SymFunc& f, const SymFunc& g);

}  // namespace frob
