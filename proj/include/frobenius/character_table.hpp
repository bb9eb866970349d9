#pragma once

#include <cstdint>
#include <vector>

#include "frobenius/exact_solve.hpp"
#include "frobenius/partition.hpp"

namespace frob {

/// Irreducible characters of S_n. Rows are indexed by the irreducible
/// lambda, columns by the class mu, both in canonical partition order.
class CharacterTable {
 public:
  using Values = Matrix<std::int64_t>;

  CharacterTable(int n, Values values);

  int degree() const { return n_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  /// chi^lambda(mu).
  std::int64_t operator()(const Partition& lambda, const Partition& mu) const;
  const Values& values() const { return values_; }

 private:
  int n_;
  std::vector<Partition> partitions_;
  Values values_;
};

/// chi^lambda(mu) by the border-strip recursion: strip a rim hook of length
/// mu_1 from lambda in every possible way, signed by (-1)^{height}.
std::int64_t murnaghan_nakayama(const Partition& lambda, const Partition& mu);

/// Memoized per degree; safe to call concurrently.
const CharacterTable& character_table(int n);

}  // namespace frob
