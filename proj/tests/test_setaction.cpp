#include <doctest.h>

#include "frobenius/builtin_actions.hpp"
#include "frobenius/oracles.hpp"
#include "frobenius/setaction.hpp"

using namespace frob;

namespace {

Permutation perm(std::initializer_list<int> one_based) {
  std::vector<int> v(one_based);
  return Permutation::from_one_based(v);
}

}  // namespace

TEST_CASE("validate") {
  CHECK_FALSE(validate(actions::natural(3)).has_value());
  CHECK_FALSE(validate(actions::klein_quotient()).has_value());

  // A 3-cycle is not an involution.
  const FiniteAction bad_square(3, 3, {perm({2, 3, 1}), perm({1, 3, 2})});
  auto v = validate(bad_square);
  REQUIRE(v.has_value());
  CHECK(v->relation == "s1^2");
  CHECK_THROWS_AS(require_valid(bad_square), ValidationError);

  // Two commuting transpositions cannot satisfy the braid relation unless equal.
  const FiniteAction bad_braid(3, 4, {perm({2, 1, 3, 4}), perm({1, 2, 4, 3})});
  CHECK(validate(bad_braid)->relation == "s1 s2 s1 = s2 s1 s2");

  const FiniteAction all_identity(4, 3, {perm({1, 2, 3}), perm({1, 2, 3}),
                                         perm({1, 2, 3})});
  CHECK_FALSE(validate(all_identity).has_value());
  // Both braid relations hold here; only s1 s3 = s3 s1 fails.
  const FiniteAction noncommuting(4, 3, {perm({2, 1, 3}), perm({2, 1, 3}),
                                         perm({1, 3, 2})});
  CHECK(validate(noncommuting)->relation == "s1 s3 = s3 s1");

  CHECK_THROWS_AS(FiniteAction(3, 3, {perm({2, 1, 3})}), PreconditionError);
  CHECK_THROWS_AS(FiniteAction(2, 3, {perm({2, 1})}), PreconditionError);
}

TEST_CASE("image_of") {
  const auto a = actions::natural(3);
  CHECK(image_of(a, Permutation::identity(3)).is_identity());
  CHECK(image_of(a, perm({2, 1, 3})) == perm({2, 1, 3}));
  const int w1[] = {0, 1, 0};
  const int w2[] = {1, 0, 1};
  CHECK(image_of_word(a, w1) == image_of_word(a, w2));
  CHECK(image_of_word(a, w1) == perm({3, 2, 1}));

  // The natural action is the identity homomorphism.
  for (const auto& lambda : partitions_of(5)) {
    const auto g = canonical_permutation(lambda);
    CHECK(image_of(actions::natural(5), g) == g);
  }
}

TEST_CASE("fixed_points") {
  const auto nat = actions::natural(3);
  CHECK(fixed_points(nat, Partition{1, 1, 1}) == 3);
  CHECK(fixed_points(nat, Partition{2, 1}) == 1);
  const auto klein = actions::klein_quotient();
  CHECK(fixed_points(klein, Partition{2, 2}) == 3);
  const std::vector<long> expected{3, 1, 3, 0, 1};  // (1^4),(2,1,1),(2,2),(3,1),(4)
  const std::vector<Partition> classes{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
  for (size_t i = 0; i < classes.size(); ++i)
    CHECK(fixed_points(klein, classes[i]) == expected[i]);
  CHECK_THROWS_AS(fixed_points(nat, Partition{2}), PreconditionError);
}

TEST_CASE("frobenius_p") {
  for (int n = 1; n <= 5; ++n)
    CHECK(frobenius_p(actions::trivial(n)) ==
          SymFunc::basis_element(Basis::H, Partition{n}));
  CHECK(frobenius_p(actions::natural(2))
            .same_terms(SymFunc::basis_element(Basis::P, Partition{1, 1})));
  const auto klein_s = convert(frobenius_p(actions::klein_quotient()), Basis::S);
  CHECK(klein_s.same_terms(SymFunc::from_terms(
      Basis::S, {{Partition{4}, Rational(1)}, {Partition{2, 2}, Rational(1)}})));
}

TEST_CASE("young_orbits") {
  const auto nat = actions::natural(3);
  CHECK(young_orbits(nat, YoungSubgroup(Partition{1, 1, 1})) == 3);
  CHECK(young_orbits(nat, YoungSubgroup(Partition{3})) == 1);
  CHECK(young_orbits(actions::klein_quotient(), YoungSubgroup(Partition{2, 2})) == 2);
  const int bad[] = {2, 2};
  CHECK_THROWS_AS(block_subgroup_orbits(nat, bad), PreconditionError);
}

TEST_CASE("class profiles") {
  const auto profiles = class_profiles(Partition{2, 1});
  REQUIRE(profiles.size() == 2);
  CHECK(profiles[0].blocks() == std::vector<Partition>{{2}, {1}});
  CHECK(profiles[1].blocks() == std::vector<Partition>{{1, 1}, {1}});
  CHECK(profiles[0].representative() == perm({2, 1, 3}));
  CHECK(profiles[1].centraliser_order() == 2);
  CHECK(ClassProfile(Partition{3, 2}, {{2, 1}, {2}}).cycle_type() == Partition{2, 2, 1});
  CHECK_THROWS_AS(ClassProfile(Partition{3}, {{2}}), PreconditionError);

  // Class sizes |S_mu| / prod z sum to |S_mu|.
  for (const auto& mu : partitions_of(6)) {
    BigInt order = 1;
    for (int p : mu.parts()) order *= factorial(p);
    BigInt total = 0;
    for (const auto& c : class_profiles(mu)) total += order / c.centraliser_order();
    CHECK(total == order);
  }
}

TEST_CASE("burnside_orbits") {
  CHECK(burnside_orbits(actions::natural(3), YoungSubgroup(Partition{2, 1})) == 2);
  CHECK(burnside_orbits(actions::klein_quotient(), YoungSubgroup(Partition{1, 1, 1, 1})) == 3);
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : {actions::natural(n), actions::trivial(n), actions::subsets(n, n / 2)}) {
      // mu = (n): the number of S_n-orbits.
      Rational orbits = 0;
      for (const auto& lambda : partitions_of(n))
        orbits += Rational(BigInt(fixed_points(a, lambda)), z(lambda));
      CHECK(Rational(burnside_orbits(a, YoungSubgroup(Partition{n}))) == orbits);
    }
}

TEST_CASE("frobenius_m") {
  for (int n = 1; n <= 5; ++n) {
    const auto t = frobenius_m(actions::trivial(n));
    CHECK(t.terms().size() == partitions_of(n).size());
    for (const auto& [mu, c] : t.terms()) CHECK(c == 1);
    const auto nat = frobenius_m(actions::natural(n));
    for (const auto& mu : partitions_of(n)) CHECK(nat.coeff(mu) == mu.length());
  }
  CHECK(frobenius_m(actions::klein_quotient())
            .same_terms(SymFunc::from_terms(Basis::M, {{Partition{4}, Rational(1)},
                                                       {Partition{3, 1}, Rational(1)},
                                                       {Partition{2, 2}, Rational(2)},
                                                       {Partition{2, 1, 1}, Rational(2)},
                                                       {Partition{1, 1, 1, 1}, Rational(3)}})));
}

TEST_CASE("built-ins") {
  const auto nat = actions::natural(3);
  CHECK(nat.generators() == std::vector<Permutation>{perm({2, 1, 3}), perm({1, 3, 2})});
  CHECK(actions::parking_action(2).ground_size() == 3);
  CHECK(actions::subsets(4, 2).ground_size() == 6);
  CHECK(actions::subsets(3, 0).ground_size() == 1);
  CHECK_THROWS_AS(actions::subsets(3, 4), PreconditionError);
  CHECK_THROWS_AS(actions::natural(0), PreconditionError);
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) CHECK_FALSE(validate(actions::subsets(n, k)).has_value());

  CHECK(actions::from_name("subsets:4:2", 100).ground_size() == 6);
  CHECK(actions::ground_size_of("parking:7") == 262144);
  CHECK_THROWS_AS(actions::from_name("parking:7", 20000), PreconditionError);
  CHECK_THROWS_AS(actions::from_name("natural", 100), PreconditionError);
  CHECK_THROWS_AS(actions::from_name("natural:x", 100), PreconditionError);
  CHECK_THROWS_AS(actions::from_name("cube:3", 100), PreconditionError);
}

TEST_CASE("main theorem on every built-in action of small rank") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<FiniteAction> all{actions::trivial(n), actions::natural(n),
                                  actions::parking_action(n)};
    for (int k = 0; 2 * k <= n; ++k) all.push_back(actions::subsets(n, k));
    if (n == 4) all.push_back(actions::klein_quotient());
    for (const auto& a : all) {
      const auto via_p = convert(frobenius_p(a), Basis::M);
      CHECK(via_p.same_terms(frobenius_m(a)));
      for (const auto& mu : partitions_of(n)) {
        const BigInt o = young_orbits(a, YoungSubgroup(mu));
        CHECK(o == burnside_orbits(a, YoungSubgroup(mu)));
        CHECK(o == oracle::element_burnside_orbits(a, mu.parts()));
      }
    }
  }
}

TEST_CASE("orbit counts do not depend on block order") {
  const auto a = actions::subsets(5, 2);
  const int ab[] = {3, 2};
  const int ba[] = {2, 3};
  CHECK(block_subgroup_orbits(a, ab) == block_subgroup_orbits(a, ba));
  CHECK(oracle::element_burnside_orbits(a, ba) == block_subgroup_orbits(a, ab));
}
