#pragma once

#include <functional>
#include <string>
#include <vector>

#include "frobenius/setaction.hpp"

namespace frob::selftest {

struct SuiteResult {
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  bool passed() const { return failures.empty(); }
};

/// Every built-in action of rank n: trivial, natural, subsets with
/// k <= n/2, klein (n = 4 only) and parking, labelled by CLI name.
std::vector<std::pair<std::string, FiniteAction>> builtin_actions_of_rank(int n);

using Reporter = std::function<void(const SuiteResult&)>;

/// Runs the invariant suites for degrees up to max_n (1..6). The reporter,
/// when given, is called as each suite finishes.
std::vector<SuiteResult> run(int max_n, const Reporter& reporter = {});

}  // namespace frob::selftest
