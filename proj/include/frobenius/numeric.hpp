#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace frob {

// Expression templates are disabled so the types behave as plain values
// inside Eigen matrices and standard containers.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// A caller handed in arguments outside an operation's domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact identity that must hold failed; indicates a bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// "num" for integers, "num/den" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Accepts "num" or "num/den" with optional leading sign; result is reduced.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

BigInt factorial(int n);

}  // namespace frob
