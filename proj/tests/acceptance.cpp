// Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails or runs over its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "frobenius/builtin_actions.hpp"
#include "frobenius/character_table.hpp"
#include "frobenius/oracles.hpp"
#include "frobenius/parking.hpp"
#include "frobenius/selftest.hpp"
#include "frobenius/setaction.hpp"
#include "frobenius/symfunc.hpp"

using namespace frob;

namespace {

struct Criterion {
  std::string id;
  std::string description;
  double time_limit_seconds;
  // Returns an empty string on success, otherwise the first discrepancy.
  std::function<std::string()> body;
};

SymFunc terms(Basis b, std::vector<std::pair<Partition, long>> raw) {
  std::vector<std::pair<Partition, Rational>> t;
  for (auto& [p, c] : raw) t.emplace_back(p, Rational(c));
  return SymFunc::from_terms(b, t);
}

std::string klein_expansions() {
  const SymFunc fp = frobenius_p(actions::klein_quotient());
  const SymFunc s = terms(Basis::S, {{{4}, 1}, {{2, 2}, 1}});
  const SymFunc h = terms(Basis::H, {{{4}, 1}, {{3, 1}, -1}, {{2, 2}, 1}});
  const SymFunc e = terms(Basis::E, {{{4}, -1}, {{3, 1}, 1}, {{2, 2}, 2}, {{2, 1, 1}, -3},
                                     {{1, 1, 1, 1}, 1}});
  if (!convert(fp, Basis::S).same_terms(s)) return "S expansion differs";
  if (!convert(fp, Basis::H).same_terms(h)) return "H expansion differs";
  if (!convert(fp, Basis::E).same_terms(e)) return "E expansion differs";
  return {};
}

std::string three_routes() {
  for (int n = 1; n <= 6; ++n)
    for (const auto& [name, a] : selftest::builtin_actions_of_rank(n)) {
      const SymFunc converted = convert(frobenius_p(a), Basis::M);
      for (const auto& mu : partitions_of(n)) {
        const YoungSubgroup y(mu);
        const BigInt uf = young_orbits(a, y);
        const std::string at = name + " at " + mu.str();
        if (converted.coeff(mu) != Rational(uf)) return "m-coefficient != union-find, " + at;
        if (burnside_orbits(a, y) != uf) return "profile Burnside != union-find, " + at;
        if (n <= 5 && oracle::element_burnside_orbits(a, mu.parts()) != uf)
          return "element Burnside != union-find, " + at;
      }
    }
  return {};
}

std::string parking_counts() {
  const long expected[] = {1, 3, 16, 125, 1296, 16807, 262144};
  for (int n = 1; n <= 7; ++n) {
    const auto size = parking::generate_all(n).size();
    if (static_cast<long>(size) != expected[n - 1])
      return "|PF_" + std::to_string(n) + "| = " + std::to_string(size);
    if (parking::count_formula(n) != expected[n - 1]) return "(n+1)^(n-1) mismatch";
  }
  return {};
}

std::string parking_orbit_formula() {
  for (int n = 1; n <= 6; ++n) {
    const auto a = actions::parking_action(n);
    for (const auto& mu : partitions_of(n))
      if (parking::orbit_count_formula(n, mu) != young_orbits(a, YoungSubgroup(mu)))
        return "n=" + std::to_string(n) + " mu=" + mu.str();
  }
  return {};
}

std::string pollak_rotation() {
  using namespace parking;
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> prefs(static_cast<size_t>(n), 1);
    while (true) {
      const PreferenceFunction f(prefs, n + 1);
      int parking_rotations = 0;
      for (int shift = 0; shift <= n; ++shift) {
        const auto r = rotate(f, shift);
        const bool in_range = std::all_of(r.prefs().begin(), r.prefs().end(),
                                          [&](int v) { return v <= n; });
        const bool pf = in_range && is_parking(PreferenceFunction(r.prefs()));
        parking_rotations += pf;
        if (pf != (park_circular(r).unoccupied == n + 1))
          return "parking rotation does not leave space n+1 empty, n=" + std::to_string(n);
      }
      if (parking_rotations != 1)
        return std::to_string(parking_rotations) + " parking rotations, n=" + std::to_string(n);
      int pos = n - 1;
      while (pos >= 0 && prefs[static_cast<size_t>(pos)] == n + 1) prefs[static_cast<size_t>(pos--)] = 1;
      if (pos < 0) break;
      ++prefs[static_cast<size_t>(pos)];
    }
  }
  return {};
}

std::string l_identity() {
  for (int n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& mu : partitions_of(n))
        if (l_coefficient(lambda, mu) != l_via_splitting(lambda, mu))
          return "L" + lambda.str() + mu.str();
  return {};
}

std::string conversion_soundness() {
  for (int n = 0; n <= 6; ++n)
    for (Basis a : kAllBases)
      for (Basis b : kAllBases)
        for (const auto& lambda : partitions_of(n)) {
          const auto x = SymFunc::basis_element(a, lambda);
          if (!convert(convert(x, b), a).same_terms(x))
            return std::string("round trip ") + basis_tag(a) + "->" + basis_tag(b) + " on " +
                   lambda.str();
        }
  for (int n = 1; n <= 7; ++n) {
    const auto& table = character_table(n);
    const Matrix<BigInt> chi = table.values().unaryExpr([](std::int64_t v) { return BigInt(v); });
    const Matrix<BigInt> gram = chi.transpose() * chi;
    for (Eigen::Index i = 0; i < gram.rows(); ++i)
      for (Eigen::Index j = 0; j < gram.cols(); ++j)
        if (gram(i, j) != (i == j ? z(table.partitions()[static_cast<size_t>(i)]) : BigInt(0)))
          return "column orthogonality at n=" + std::to_string(n);
  }
  for (int n = 1; n <= 6; ++n)
    for (Basis a : kAllBases)
      for (const auto& lambda : partitions_of(n)) {
        const auto f = SymFunc::basis_element(a, lambda);
        const auto in_m = convert(f, Basis::M);
        for (const auto& mu : partitions_of(n))
          if (inner_product(f, SymFunc::basis_element(Basis::H, mu)) != in_m.coeff(mu))
            return "<f,h_mu> != [m_mu] f";
      }
  // The Frobenius characters themselves.
  for (int n = 1; n <= 6; ++n)
    for (const auto& [name, a] : selftest::builtin_actions_of_rank(n)) {
      const auto f = frobenius_p(a);
      const auto in_m = convert(f, Basis::M);
      for (const auto& mu : partitions_of(n))
        if (inner_product(f, SymFunc::basis_element(Basis::H, mu)) != in_m.coeff(mu))
          return "<F_V,h_mu> != [m_mu] F_V for " + name;
    }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "klein character in the s, h and e bases", 1.0, klein_expansions},
      {"AC2", "convert(F_p, M) = union-find = profile Burnside = element Burnside, n <= 6",
       600.0, three_routes},
      {"AC3", "|PF_n| = (n+1)^(n-1) for n = 1..7", 120.0, parking_counts},
      {"AC4", "orbit formula = union-find orbits on PF_n, n <= 6", 300.0, parking_orbit_formula},
      {"AC5", "exactly one rotation parks, and it leaves n+1 empty, n <= 5", 60.0,
       pollak_rotation},
      {"AC6", "l_coefficient = l_via_splitting, n <= 8", 60.0, l_identity},
      {"AC7", "round trips n <= 6, orthogonality n <= 7, <f,h_mu> = [m_mu] f", 120.0,
       conversion_soundness},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.body();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && seconds > c.time_limit_seconds)
      problem = "exceeded time limit of " + std::to_string(c.time_limit_seconds) + " s";
    const bool ok = problem.empty();
    failures += !ok;
    std::printf("%s %s: %s (%.3f s, limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.id.c_str(),
                c.description.c_str(), seconds, c.time_limit_seconds, ok ? "" : " -- ",
                problem.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
