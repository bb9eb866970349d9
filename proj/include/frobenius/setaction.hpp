#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "frobenius/partition.hpp"
#include "frobenius/permutation.hpp"
#include "frobenius/symfunc.hpp"

namespace frob {

/// An S_n-set on the ground set {0..m-1}, given by the images of the n-1
/// adjacent transpositions (i, i+1).
class FiniteAction {
 public:
  /// Throws PreconditionError unless there are n-1 generators, each a
  /// permutation of exactly m points. Coxeter relations are checked by
  /// validate().
  FiniteAction(int n, int m, std::vector<Permutation> gens);

  int rank() const { return n_; }
  int ground_size() const { return m_; }
  const std::vector<Permutation>& generators() const { return gens_; }

 private:
  int n_;
  int m_;
  std::vector<Permutation> gens_;
};

struct RelationViolation {
  /// Human-readable relation with 1-based generator indices, e.g. "s1^2",
  /// "s2 s3 s2 = s3 s2 s3" or "s1 s3 = s3 s1".
  std::string relation;
};

/// First violated Coxeter relation of type A_{n-1}, or nullopt if the
/// generators extend to a homomorphism S_n -> S_m.
std::optional<RelationViolation> validate(const FiniteAction& a);

class ValidationError : public PreconditionError {
 public:
  explicit ValidationError(const RelationViolation& v)
      : PreconditionError("action violates relation " + v.relation),
        violation_(v) {}
  const RelationViolation& violation() const { return violation_; }

 private:
  RelationViolation violation_;
};

/// Throws ValidationError naming the first violated relation.
void require_valid(const FiniteAction& a);

/// Composes gens[w[0]] * gens[w[1]] * ... (0-based transposition indices).
Permutation image_of_word(const FiniteAction& a, std::span<const int> word);
/// Image of g in S_m via its bubble-sort word.
Permutation image_of(const FiniteAction& a, const Permutation& g);

/// Character of C(M) at the class lambda: #Fix of the image of
/// canonical_permutation(lambda).
long fixed_points(const FiniteAction& a, const Partition& lambda);

/// sum_lambda #Fix(lambda) p_lambda / z_lambda.
SymFunc frobenius_p(const FiniteAction& a);

/// S_{mu_1} x S_{mu_2} x ... acting on consecutive blocks of {1..n}.
class YoungSubgroup {
 public:
  explicit YoungSubgroup(Partition mu);

  const Partition& mu() const { return mu_; }
  /// Half-open 0-based ranges [begin, end).
  const std::vector<std::pair<int, int>>& blocks() const { return blocks_; }

 private:
  Partition mu_;
  std::vector<std::pair<int, int>> blocks_;
};

/// Orbits of the subgroup generated by the adjacent transpositions inside
/// consecutive blocks of the given sizes (any order, positive, summing to n).
BigInt block_subgroup_orbits(const FiniteAction& a,
                             std::span<const int> block_sizes);

/// #(M / S_mu) by union-find over the in-block generators.
BigInt young_orbits(const FiniteAction& a, const YoungSubgroup& y);

/// A conjugacy class of S_mu: one partition of mu_i per block.
class ClassProfile {
 public:
  /// Throws PreconditionError unless profile[i] |- mu_i for every block.
  ClassProfile(const Partition& mu, std::vector<Partition> profile);

  const std::vector<Partition>& blocks() const { return profile_; }
  /// Each block cycled consecutively by its own canonical permutation.
  Permutation representative() const;
  /// prod_i z(profile[i]), the centraliser order inside S_mu.
  BigInt centraliser_order() const;
  /// Cycle type of the representative in S_n.
  Partition cycle_type() const;

 private:
  std::vector<Partition> profile_;
};

/// Every conjugacy class of S_mu, blocks varying lexicographically in the
/// canonical partition order.
std::vector<ClassProfile> class_profiles(const Partition& mu);

/// Burnside's count grouped by conjugacy classes of S_mu:
/// sum over profiles of #Fix(representative) / prod_i z(mu^(i)).
/// Throws ConsistencyError if the total is not an integer.
BigInt burnside_orbits(const FiniteAction& a, const YoungSubgroup& y);

/// sum_mu #(M/S_mu) m_mu, each coefficient from young_orbits.
SymFunc frobenius_m(const FiniteAction& a);

/// mu -> #(M/S_mu) for every mu |- n.
using OrbitReport = std::map<Partition, BigInt, RevLex>;
OrbitReport orbit_report(const FiniteAction& a);

}  // namespace frob
