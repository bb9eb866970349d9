#pragma once

#include <span>
#include <string>
#include <vector>

#include "frobenius/partition.hpp"

namespace frob {

/// Bijection of {0..N-1}. Points are 0-based internally; the JSON and CLI
/// surfaces use 1-based images and convert at the boundary.
class Permutation {
 public:
  Permutation() = default;
  /// Throws PreconditionError unless `images` is a bijection of {0..N-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int size);
  static Permutation from_one_based(std::span<const int> images);
  /// Swaps a and b (0-based), fixes everything else.
  static Permutation transposition(int size, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<size_t>(x)]; }
  std::span<const int> images() const { return images_; }
  std::vector<int> one_based() const;

  Permutation inverse() const;
  bool is_identity() const;
  int fixed_point_count() const;

  /// x -> lhs(rhs(x)).
  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// The permutation of {1..n} cycling consecutive blocks of lengths
/// lambda_1, lambda_2, ...
Permutation canonical_permutation(const Partition& lambda);

/// Cycle lengths sorted decreasingly.
Partition cycle_type(const Permutation& g);

/// Indices i (0-based, meaning the transposition of i and i+1) whose
/// composition s_{w[0]} * s_{w[1]} * ... equals g. Obtained by bubble sort.
std::vector<int> adjacent_transposition_word(const Permutation& g);

}  // namespace frob
