#include "frobenius/character_table.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace frob {

CharacterTable::CharacterTable(int n, Values values)
    : n_(n), partitions_(partitions_of(n)), values_(std::move(values)) {
  const auto p = static_cast<Eigen::Index>(partitions_.size());
  if (values_.rows() != p || values_.cols() != p)
    throw PreconditionError("character table has the wrong shape");
}

std::int64_t CharacterTable::operator()(const Partition& lambda,
                                        const Partition& mu) const {
  if (lambda.weight() != n_ || mu.weight() != n_)
    throw PreconditionError("character table lookup outside degree " +
                            std::to_string(n_));
  return values_(partition_index(lambda), partition_index(mu));
}

namespace {

// Beta-set encoding: lambda_i + (l - 1 - i) for i = 0..l-1, strictly
// decreasing. Removing a rim hook of length r moves one bead b to b - r.
std::vector<int> beta_set(const Partition& lambda) {
  const int l = lambda.length();
  std::vector<int> beta(static_cast<size_t>(l));
  for (int i = 0; i < l; ++i) beta[static_cast<size_t>(i)] = lambda[i] + (l - 1 - i);
  return beta;
}

Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int l = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < l; ++i) {
    const int part = beta[static_cast<size_t>(i)] - (l - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

using Memo = std::map<std::pair<Partition, std::vector<int>>, std::int64_t>;

std::int64_t mn_rec(const Partition& lambda, const std::vector<int>& rest,
                    Memo& memo) {
  if (rest.empty()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, rest);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = rest.front();
  const std::vector<int> tail(rest.begin() + 1, rest.end());
  const auto beta = beta_set(lambda);
  std::int64_t total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    const int target = b - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
      continue;
    int height = 0;
    for (int c : beta) height += (c > target && c < b);
    auto moved = beta;
    moved[i] = target;
    const std::int64_t sub = mn_rec(from_beta_set(std::move(moved)), tail, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t murnaghan_nakayama(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw PreconditionError("murnaghan_nakayama: weights differ");
  Memo memo;
  return mn_rec(lambda, std::vector<int>(mu.parts().begin(), mu.parts().end()),
                memo);
}

const CharacterTable& character_table(int n) {
  if (n < 0) throw PreconditionError("character_table: negative degree");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    const auto parts = partitions_of(n);
    const auto p = static_cast<Eigen::Index>(parts.size());
    CharacterTable::Values values(p, p);
    Memo memo;
    for (Eigen::Index i = 0; i < p; ++i)
      for (Eigen::Index j = 0; j < p; ++j) {
        const auto& mu = parts[static_cast<size_t>(j)];
        values(i, j) = mn_rec(parts[static_cast<size_t>(i)],
                              std::vector<int>(mu.parts().begin(), mu.parts().end()),
                              memo);
      }
    slot = std::make_unique<CharacterTable>(n, std::move(values));
  }
  return *slot;
}

}  // namespace frob
