#include "frobenius/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "frobenius/builtin_actions.hpp"
#include "frobenius/character_table.hpp"
#include "frobenius/oracles.hpp"
#include "frobenius/parking.hpp"

namespace frob::selftest {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok) result_.failures.push_back(what);
  }

  template <class Body>
  SuiteResult run(Body body) {
    const auto start = std::chrono::steady_clock::now();
    try {
      body(*this);
    } catch (const std::exception& e) {
      result_.failures.push_back(std::string("exception: ") + e.what());
    }
    result_.seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    return result_;
  }

 private:
  SuiteResult result_;
};

void partitions_suite(Suite& s, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    const auto parts = partitions_of(n);
    s.check(parts == oracle::partitions_by_extension(n),
            "partitions_of(" + std::to_string(n) + ") differs from extension oracle");
    s.check(static_cast<long>(parts.size()) == oracle::partition_count(n),
            "p(" + std::to_string(n) + ") differs from pentagonal recurrence");
    s.check(std::set<Partition>(parts.begin(), parts.end()).size() == parts.size(),
            "duplicate partitions of " + std::to_string(n));
    BigInt class_sizes = 0;
    for (const auto& lambda : parts) {
      s.check(lambda.weight() == n, lambda.str() + " has the wrong weight");
      class_sizes += factorial(n) / z(lambda);
      s.check(cycle_type(canonical_permutation(lambda)) == lambda,
              "cycle_type round trip fails for " + lambda.str());
    }
    s.check(class_sizes == factorial(n),
            "class sizes of S_" + std::to_string(n) + " do not sum to n!");
  }
}

void l_matrix_suite(Suite& s, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& lambda : parts) {
      s.check(l_coefficient(lambda, Partition{n}) == 1,
              "L(" + lambda.str() + ",(n)) != 1");
      s.check(l_coefficient(lambda, lambda) >= 1, "L(lambda,lambda) < 1");
      for (const auto& mu : parts) {
        const BigInt l = l_coefficient(lambda, mu);
        const std::string tag = "L(" + lambda.str() + "," + mu.str() + ")";
        s.check(l == l_via_splitting(lambda, mu), tag + " splitting route differs");
        s.check(l == oracle::l_by_all_maps(lambda, mu), tag + " all-maps oracle differs");
        s.check(l == oracle::l_by_polynomial_expansion(lambda, mu),
                tag + " polynomial expansion differs");
      }
    }
  }
}

void character_suite(Suite& s, int max_n) {
  for (int n = 1; n <= max_n + 1; ++n) {
    const auto& table = character_table(n);
    const RationalMatrix chi = table.values().unaryExpr(
        [](std::int64_t v) { return Rational(v); });
    const RationalMatrix gram = chi.transpose() * chi;
    const auto& parts = table.partitions();
    for (size_t i = 0; i < parts.size(); ++i)
      for (size_t j = 0; j < parts.size(); ++j) {
        const Rational expected = i == j ? Rational(z(parts[i])) : Rational(0);
        s.check(gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) == expected,
                "column orthogonality fails at n=" + std::to_string(n));
      }
    if (n > max_n) continue;
    SymFunc p1n = SymFunc::basis_element(Basis::P, Partition::ones(n));
    const SymFunc in_s = convert(p1n, Basis::S);
    for (const auto& lambda : parts) {
      const BigInt dim = oracle::hook_length_dimension(lambda);
      s.check(table(lambda, Partition::ones(n)) == dim.convert_to<std::int64_t>(),
              "dimension of " + lambda.str() + " differs from hook length formula");
      s.check(in_s.coeff(lambda) == Rational(dim),
              "p_1^n expansion coefficient of s_" + lambda.str() + " is not the dimension");
    }
  }
}

void conversion_suite(Suite& s, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    const auto parts = partitions_of(n);
    for (Basis a : kAllBases)
      for (Basis b : kAllBases)
        for (const auto& lambda : parts) {
          const auto x = SymFunc::basis_element(a, lambda);
          s.check(convert(convert(x, b), a).same_terms(x),
                  std::string("round trip ") + basis_tag(a) + "->" + basis_tag(b) +
                      " fails on " + lambda.str());
        }
    for (Basis a : kAllBases)
      for (const auto& lambda : parts) {
        const auto f = SymFunc::basis_element(a, lambda);
        const auto in_m = convert(f, Basis::M);
        for (const auto& mu : parts)
          s.check(inner_product(f, SymFunc::basis_element(Basis::H, mu)) == in_m.coeff(mu),
                  "<f,h_mu> differs from the m_mu coefficient");
      }
    for (const auto& lambda : parts)
      for (const auto& mu : parts)
        s.check(inner_product(SymFunc::basis_element(Basis::S, lambda),
                              SymFunc::basis_element(Basis::S, mu)) ==
                    Rational(lambda == mu ? 1 : 0),
                "Schur functions are not orthonormal");
  }
}

Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> images(static_cast<size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

void action_suite(Suite& s, int max_n) {
  std::mt19937 rng(20260101);
  for (int n = 1; n <= max_n; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& [name, a] : builtin_actions_of_rank(n)) {
      s.check(!validate(a).has_value(), name + " fails validation");
      for (const auto& lambda : parts) {
        const long fix = fixed_points(a, lambda);
        const auto rep = canonical_permutation(lambda);
        for (int t = 0; t < 20; ++t) {
          const auto c = random_permutation(n, rng);
          const auto conj = c * rep * c.inverse();
          s.check(image_of(a, conj).fixed_point_count() == fix,
                  name + ": fixed points not constant on class " + lambda.str());
          s.check(image_of(a, conj) ==
                      image_of_word(a, oracle::cycle_word(conj)),
                  name + ": image depends on the chosen word");
        }
      }
      const SymFunc via_p = convert(frobenius_p(a), Basis::M);
      const SymFunc via_orbits = frobenius_m(a);
      s.check(via_p.same_terms(via_orbits),
              name + ": convert(frobenius_p, M) != frobenius_m");
      for (const auto& mu : parts) {
        const YoungSubgroup y(mu);
        const BigInt orbits = young_orbits(a, y);
        s.check(orbits == burnside_orbits(a, y),
                name + ": burnside_orbits differs at " + mu.str());
        s.check(via_p.coeff(mu) == Rational(orbits),
                name + ": m-coefficient differs from orbit count at " + mu.str());
        if (n <= 5)
          s.check(orbits == oracle::element_burnside_orbits(a, mu.parts()),
                  name + ": element Burnside oracle differs at " + mu.str());
        if (n <= 5) {
          std::vector<int> order(mu.parts().begin(), mu.parts().end());
          std::sort(order.begin(), order.end());
          do {
            s.check(block_subgroup_orbits(a, order) == orbits,
                    name + ": orbit count depends on block order for " + mu.str());
          } while (std::next_permutation(order.begin(), order.end()));
        }
        for (int i = 0; i < mu.length(); ++i)
          for (int j = i + 1; j < mu.length(); ++j) {
            std::vector<int> merged;
            for (int k = 0; k < mu.length(); ++k)
              if (k != i && k != j) merged.push_back(mu[k]);
            merged.push_back(mu[i] + mu[j]);
            const auto nu = Partition::from_unsorted(merged);
            s.check(young_orbits(a, YoungSubgroup(nu)) <= orbits,
                    name + ": merging blocks of " + mu.str() + " increased orbits");
          }
      }
      s.check(young_orbits(a, YoungSubgroup(Partition::ones(n))) == a.ground_size(),
              name + ": trivial subgroup orbit count != m");
    }
  }
}

void parking_suite(Suite& s, int max_n) {
  using namespace parking;
  for (int n = 1; n <= std::min(max_n, 5); ++n) {
    // Every f: [n] -> [n+1].
    std::vector<int> prefs(static_cast<size_t>(n), 1);
    while (true) {
      const PreferenceFunction f(prefs, n + 1);
      int parking_rotations = 0;
      for (int shift = 0; shift <= n; ++shift) {
        const auto r = rotate(f, shift);
        const bool in_range =
            std::all_of(r.prefs().begin(), r.prefs().end(), [&](int v) { return v <= n; });
        const bool pf = in_range && is_parking(PreferenceFunction(r.prefs()));
        parking_rotations += pf;
        s.check(pf == (park_circular(r).unoccupied == n + 1),
                "parking rotation is not the one leaving n+1 empty");
      }
      s.check(parking_rotations == 1, "rotation class without exactly one parking function");
      int pos = n - 1;
      while (pos >= 0 && prefs[static_cast<size_t>(pos)] == n + 1) prefs[static_cast<size_t>(pos--)] = 1;
      if (pos < 0) break;
      ++prefs[static_cast<size_t>(pos)];
    }
    // is_parking agrees with the linear process on all of [n]^n.
    std::vector<int> g(static_cast<size_t>(n), 1);
    while (true) {
      const PreferenceFunction f(g);
      const bool pf = is_parking(f);
      s.check(pf == park_linear(f).success, "is_parking disagrees with park_linear");
      s.check(pf == oracle::parking_by_sorting(g), "is_parking disagrees with sorting test");
      int pos = n - 1;
      while (pos >= 0 && g[static_cast<size_t>(pos)] == n) g[static_cast<size_t>(pos--)] = 1;
      if (pos < 0) break;
      ++g[static_cast<size_t>(pos)];
    }
  }
  for (int n = 1; n <= max_n; ++n) {
    s.check(BigInt(generate_all(n).size()) == count_formula(n),
            "|PF_" + std::to_string(n) + "| != (n+1)^(n-1)");
    const auto a = actions::parking_action(n);
    const auto fm = n <= 5 ? frobenius_m(a) : SymFunc(Basis::M, n);
    for (const auto& mu : partitions_of(n)) {
      const BigInt formula = orbit_count_formula(n, mu);
      const YoungSubgroup y(mu);
      s.check(formula == young_orbits(a, y), "formula != union-find at " + mu.str());
      s.check(formula == burnside_orbits(a, y), "formula != burnside at " + mu.str());
      if (n <= 5) {
        s.check(formula == orbit_count_pollak(n, mu), "formula != Pollak route at " + mu.str());
        s.check(fm.coeff(mu) == Rational(formula), "frobenius_m(PF) coefficient differs at " + mu.str());
      }
    }
  }
}

}  // namespace

std::vector<std::pair<std::string, FiniteAction>> builtin_actions_of_rank(int n) {
  std::vector<std::pair<std::string, FiniteAction>> out;
  const auto tag = [n](const char* kind) { return std::string(kind) + ":" + std::to_string(n); };
  out.emplace_back(tag("trivial"), actions::trivial(n));
  out.emplace_back(tag("natural"), actions::natural(n));
  for (int k = 0; 2 * k <= n; ++k)
    out.emplace_back(tag("subsets") + ":" + std::to_string(k), actions::subsets(n, k));
  if (n == 4) out.emplace_back("klein", actions::klein_quotient());
  out.emplace_back(tag("parking"), actions::parking_action(n));
  return out;
}

std::vector<SuiteResult> run(int max_n, const Reporter& reporter) {
  if (max_n < 1 || max_n > 6) throw PreconditionError("selftest: max_n must lie in 1..6");
  std::vector<SuiteResult> results;
  auto add = [&](const char* name, void (*body)(Suite&, int)) {
    results.push_back(Suite(name).run([&](Suite& s) { body(s, max_n); }));
    if (reporter) reporter(results.back());
  };
  add("partitions", partitions_suite);
  add("l-matrix", l_matrix_suite);
  add("characters", character_suite);
  add("conversions", conversion_suite);
  add("actions", action_suite);
  add("parking", parking_suite);
  return results;
}

}  // namespace frob::selftest
