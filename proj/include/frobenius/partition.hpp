#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "frobenius/numeric.hpp"

namespace frob {

/// Integer partition stored as its nonzero parts in weakly decreasing order.
/// The empty partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws PreconditionError unless the parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Sorts the given positive parts into decreasing order first.
  static Partition from_unsorted(std::vector<int> parts);
  /// n ones.
  static Partition ones(int n);

  std::span<const int> parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

  /// Number of parts equal to s.
  int multiplicity(int s) const;

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Plain lexicographic comparison of the part sequences. Canonical
  /// (reverse-lexicographic) order is therefore std::greater<>.
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Comparator giving the canonical largest-first order.
using RevLex = std::greater<Partition>;

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Position of lambda in partitions_of(lambda.weight()).
int partition_index(const Partition& lambda);

/// Centraliser order prod_s s^{m_s} m_s!.
BigInt z(const Partition& lambda);

int multiplicity(const Partition& lambda, int s);

/// top! / prod bottoms[i]!; throws PreconditionError if the bottoms do not sum
/// to top.
BigInt multinomial(int top, std::span<const int> bottoms);

/// Parts of a and b pooled.
Partition join(const Partition& a, const Partition& b);

}  // namespace frob
