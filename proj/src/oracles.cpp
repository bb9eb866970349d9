#include "frobenius/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace frob::oracle {

std::vector<Partition> partitions_by_extension(int n) {
  // table[k] holds the partitions of k as raw decreasing vectors.
  std::vector<std::set<std::vector<int>>> table(static_cast<size_t>(n + 1));
  table[0].insert(std::vector<int>{});
  for (int k = 1; k <= n; ++k)
    for (int first = 1; first <= k; ++first)
      for (const auto& rest : table[static_cast<size_t>(k - first)]) {
        if (!rest.empty() && rest.front() > first) continue;
        std::vector<int> v{first};
        v.insert(v.end(), rest.begin(), rest.end());
        table[static_cast<size_t>(k)].insert(v);
      }
  std::vector<Partition> out;
  for (const auto& v : table[static_cast<size_t>(n)]) out.emplace_back(v);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

long partition_count(int n) {
  std::vector<long> p(static_cast<size_t>(n + 1), 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * p[static_cast<size_t>(m - g1)];
      if (g2 <= m) acc += sign * p[static_cast<size_t>(m - g2)];
    }
    p[static_cast<size_t>(m)] = acc;
  }
  return p[static_cast<size_t>(n)];
}

BigInt hook_length_dimension(const Partition& lambda) {
  BigInt hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      int below = 0;
      for (int r = i + 1; r < lambda.length() && lambda[r] > j; ++r) ++below;
      hooks *= (lambda[i] - j - 1) + below + 1;
    }
  return factorial(lambda.weight()) / hooks;
}

BigInt l_by_all_maps(const Partition& lambda, const Partition& mu) {
  const int l = lambda.length();
  const int k = mu.length();
  if (k == 0) return l == 0 ? 1 : 0;
  std::vector<int> phi(static_cast<size_t>(l), 0);
  BigInt count = 0;
  while (true) {
    std::vector<int> fibre(static_cast<size_t>(k), 0);
    for (int i = 0; i < l; ++i) fibre[static_cast<size_t>(phi[static_cast<size_t>(i)])] += lambda[i];
    bool ok = true;
    for (int j = 0; j < k; ++j) ok = ok && fibre[static_cast<size_t>(j)] == mu[j];
    if (ok) ++count;
    int pos = 0;
    while (pos < l && phi[static_cast<size_t>(pos)] == k - 1) phi[static_cast<size_t>(pos++)] = 0;
    if (pos == l) break;
    ++phi[static_cast<size_t>(pos)];
  }
  return count;
}

BigInt l_by_polynomial_expansion(const Partition& lambda, const Partition& mu) {
  const int k = mu.length();
  using Poly = std::map<std::vector<int>, BigInt>;
  Poly poly{{std::vector<int>(static_cast<size_t>(k), 0), BigInt(1)}};
  for (int part : lambda.parts()) {
    Poly next;
    for (const auto& [exps, c] : poly)
      for (int var = 0; var < k; ++var) {
        auto e = exps;
        e[static_cast<size_t>(var)] += part;
        // Monomials already past the target exponent can never reach it.
        if (e[static_cast<size_t>(var)] > mu[var]) continue;
        next[e] += c;
      }
    poly = std::move(next);
  }
  std::vector<int> target(mu.parts().begin(), mu.parts().end());
  auto it = poly.find(target);
  return it == poly.end() ? BigInt(0) : it->second;
}

std::vector<int> cycle_word(const Permutation& g) {
  std::vector<int> word;
  auto transposition = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    for (int i = a; i < b - 1; ++i) word.push_back(i);
    word.push_back(b - 1);
    for (int i = b - 2; i >= a; --i) word.push_back(i);
  };
  std::vector<char> seen(static_cast<size_t>(g.size()), 0);
  for (int start = 0; start < g.size(); ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<size_t>(x)]; x = g(x)) {
      seen[static_cast<size_t>(x)] = 1;
      cycle.push_back(x);
    }
    // (c0 c1 ... c_{r-1}) = (c0 c_{r-1}) ... (c0 c2)(c0 c1).
    for (size_t j = cycle.size(); j-- > 1;) transposition(cycle[0], cycle[j]);
  }
  return word;
}

namespace {

Permutation act(const FiniteAction& a, const Permutation& g) {
  auto result = Permutation::identity(a.ground_size());
  for (int letter : cycle_word(g))
    result = result * a.generators()[static_cast<size_t>(letter)];
  return result;
}

}  // namespace

BigInt element_burnside_orbits(const FiniteAction& a,
                               std::span<const int> block_sizes) {
  const int n = a.rank();
  std::vector<int> line(static_cast<size_t>(n));
  std::iota(line.begin(), line.end(), 0);
  std::vector<int> starts;
  int start = 0;
  for (int b : block_sizes) {
    starts.push_back(start);
    start += b;
  }
  if (start != n) throw PreconditionError("block sizes must sum to the rank");

  BigInt fixed_total = 0;
  BigInt order = 1;
  std::function<void(size_t)> rec = [&](size_t block) {
    if (block == block_sizes.size()) {
      fixed_total += act(a, Permutation(line)).fixed_point_count();
      return;
    }
    auto first = line.begin() + starts[block];
    auto last = first + block_sizes[block];
    std::sort(first, last);
    do {
      rec(block + 1);
    } while (std::next_permutation(first, last));
  };
  rec(0);
  for (int b : block_sizes) order *= factorial(b);
  if (fixed_total % order != 0)
    throw ConsistencyError("element Burnside sum not divisible by group order");
  return fixed_total / order;
}

bool parking_by_sorting(std::span<const int> prefs) {
  std::vector<int> sorted(prefs.begin(), prefs.end());
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] > static_cast<int>(i) + 1) return false;
  return true;
}

}  // namespace frob::oracle
