#include "frobenius/numeric.hpp"

#include <cctype>

namespace frob {

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const BigInt& z) { return z.str(); }

namespace {

bool valid_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto num = text.substr(0, slash);
  if (!valid_integer_literal(num))
    throw PreconditionError("malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  auto den = text.substr(slash + 1);
  if (!valid_integer_literal(den))
    throw PreconditionError("malformed rational '" + std::string(text) + "'");
  BigInt d = parse_integer(den);
  if (d == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

BigInt factorial(int n) {
  if (n < 0) throw PreconditionError("factorial of a negative number");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace frob
