#pragma once

#include <optional>
#include <vector>

#include "frobenius/numeric.hpp"
#include "frobenius/partition.hpp"

namespace frob::parking {

/// Car i (0-based) prefers space prefs[i] in {1..capacity}. Capacity is n
/// for the linear street and n+1 for the circular one.
class PreferenceFunction {
 public:
  /// Throws PreconditionError if some preference is outside {1..capacity}.
  PreferenceFunction(std::vector<int> prefs, int capacity);
  /// Linear street: capacity = number of cars.
  explicit PreferenceFunction(std::vector<int> prefs);

  int cars() const { return static_cast<int>(prefs_.size()); }
  int capacity() const { return capacity_; }
  const std::vector<int>& prefs() const { return prefs_; }
  int operator[](int car) const { return prefs_[static_cast<size_t>(car)]; }

  friend bool operator==(const PreferenceFunction&,
                         const PreferenceFunction&) = default;
  friend auto operator<=>(const PreferenceFunction& a,
                          const PreferenceFunction& b) {
    return a.prefs_ <=> b.prefs_;
  }

 private:
  std::vector<int> prefs_;
  int capacity_;
};

struct ParkingOutcome {
  bool success = false;
  /// assignment[car] = occupied space (1-based); filled only on success.
  std::vector<int> assignment;
  /// Circular mode only: the single space left empty.
  std::optional<int> unoccupied;
};

/// #f^{-1}([k]) >= k for every k. Requires capacity == cars.
bool is_parking(const PreferenceFunction& f);

/// Cars arrive in order, take the preferred space or the next free one
/// further down; a car passing space n fails the run.
ParkingOutcome park_linear(const PreferenceFunction& f);

/// Same process on n+1 spaces arranged in a circle; never fails.
/// Requires capacity == cars + 1.
ParkingOutcome park_circular(const PreferenceFunction& f);

/// ((f(i) + shift - 1) mod (n+1)) + 1. Requires capacity == cars + 1 and
/// 0 <= shift <= cars.
PreferenceFunction rotate(const PreferenceFunction& f, int shift);

inline constexpr int kDefaultMaxLength = 7;

/// Every parking function of length n in lexicographic order, found by
/// filtering all n^n candidates. Refuses n outside [1, max_length].
std::vector<PreferenceFunction> generate_all(int n,
                                             int max_length = kDefaultMaxLength);

/// (n+1)^{n-1}.
BigInt count_formula(int n);

/// (1/(n+1)) prod_i binom(mu_i + n, n). Throws ConsistencyError if the
/// division is not exact.
BigInt orbit_count_formula(int n, const Partition& mu);

inline constexpr int kMaxPollakLength = 7;

/// Enumerates every tuple of multisets (sizes mu_1, mu_2, ...) over
/// {1..n+1}, groups the tuples into rotation classes and returns the number
/// of classes. Each class must contain exactly one tuple whose circular run
/// leaves space n+1 empty; ConsistencyError otherwise.
BigInt orbit_count_pollak(int n, const Partition& mu,
                          int max_length = kMaxPollakLength);

}  // namespace frob::parking
