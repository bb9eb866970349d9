#include "frobenius/parking.hpp"

#include <algorithm>

namespace frob::parking {

PreferenceFunction::PreferenceFunction(std::vector<int> prefs, int capacity)
    : prefs_(std::move(prefs)), capacity_(capacity) {
  for (int p : prefs_)
    if (p < 1 || p > capacity_)
      throw PreconditionError("preference " + std::to_string(p) +
                              " outside 1.." + std::to_string(capacity_));
}

PreferenceFunction::PreferenceFunction(std::vector<int> prefs)
    : PreferenceFunction(prefs, static_cast<int>(prefs.size())) {}

namespace {

void require_linear(const PreferenceFunction& f) {
  if (f.capacity() != f.cars())
    throw PreconditionError("linear street needs capacity equal to the number of cars");
}

void require_circular(const PreferenceFunction& f) {
  if (f.capacity() != f.cars() + 1)
    throw PreconditionError("circular street needs capacity cars + 1");
}

}  // namespace

bool is_parking(const PreferenceFunction& f) {
  require_linear(f);
  const int n = f.cars();
  std::vector<int> at_most(static_cast<size_t>(n + 1), 0);
  for (int p : f.prefs()) ++at_most[static_cast<size_t>(p)];
  int running = 0;
  for (int k = 1; k <= n; ++k) {
    running += at_most[static_cast<size_t>(k)];
    if (running < k) return false;
  }
  return true;
}

ParkingOutcome park_linear(const PreferenceFunction& f) {
  require_linear(f);
  const int n = f.cars();
  std::vector<char> taken(static_cast<size_t>(n + 1), 0);
  ParkingOutcome out;
  out.assignment.reserve(static_cast<size_t>(n));
  for (int p : f.prefs()) {
    int space = p;
    while (space <= n && taken[static_cast<size_t>(space)]) ++space;
    if (space > n) {
      out.assignment.clear();
      return out;
    }
    taken[static_cast<size_t>(space)] = 1;
    out.assignment.push_back(space);
  }
  out.success = true;
  return out;
}

ParkingOutcome park_circular(const PreferenceFunction& f) {
  require_circular(f);
  const int spaces = f.capacity();
  std::vector<char> taken(static_cast<size_t>(spaces + 1), 0);
  ParkingOutcome out;
  for (int p : f.prefs()) {
    int space = p;
    while (taken[static_cast<size_t>(space)]) space = space % spaces + 1;
    taken[static_cast<size_t>(space)] = 1;
    out.assignment.push_back(space);
  }
  out.success = true;
  for (int s = 1; s <= spaces; ++s)
    if (!taken[static_cast<size_t>(s)]) out.unoccupied = s;
  return out;
}

PreferenceFunction rotate(const PreferenceFunction& f, int shift) {
  require_circular(f);
  if (shift < 0 || shift > f.cars())
    throw PreconditionError("rotation shift must lie in 0..n");
  const int spaces = f.capacity();
  std::vector<int> out(f.prefs());
  for (int& p : out) p = (p + shift - 1) % spaces + 1;
  return PreferenceFunction(std::move(out), spaces);
}

std::vector<PreferenceFunction> generate_all(int n, int max_length) {
  if (n < 1 || n > max_length)
    throw PreconditionError("generate_all: length " + std::to_string(n) +
                            " outside the guard 1.." + std::to_string(max_length));
  std::vector<PreferenceFunction> out;
  std::vector<int> prefs(static_cast<size_t>(n), 1);
  while (true) {
    PreferenceFunction f(prefs);
    if (is_parking(f)) out.push_back(std::move(f));
    int pos = n - 1;
    while (pos >= 0 && prefs[static_cast<size_t>(pos)] == n) {
      prefs[static_cast<size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++prefs[static_cast<size_t>(pos)];
  }
  return out;
}

BigInt count_formula(int n) {
  if (n < 1) throw PreconditionError("count_formula: n must be positive");
  return boost::multiprecision::pow(BigInt(n + 1), static_cast<unsigned>(n - 1));
}

namespace {

BigInt binomial(int top, int bottom) {
  BigInt r = 1;
  for (int i = 1; i <= bottom; ++i) {
    r *= top - bottom + i;
    r /= i;
  }
  return r;
}

void require_partition_of(int n, const Partition& mu) {
  if (n < 1) throw PreconditionError("parking length must be positive");
  if (mu.weight() != n)
    throw PreconditionError(mu.str() + " is not a partition of " + std::to_string(n));
}

using Multiset = std::vector<int>;
using MultisetTuple = std::vector<Multiset>;

void multisets(int size, int lo, int alphabet, Multiset& cur,
               std::vector<Multiset>& out) {
  if (static_cast<int>(cur.size()) == size) {
    out.push_back(cur);
    return;
  }
  for (int v = lo; v <= alphabet; ++v) {
    cur.push_back(v);
    multisets(size, v, alphabet, cur, out);
    cur.pop_back();
  }
}

MultisetTuple rotate_tuple(const MultisetTuple& t, int shift, int alphabet) {
  MultisetTuple out(t);
  for (auto& ms : out) {
    for (int& v : ms) v = (v + shift - 1) % alphabet + 1;
    std::sort(ms.begin(), ms.end());
  }
  return out;
}

// Cars are seated block by block, each block's cars taking the multiset's
// values in sorted order; any order inside a block gives the same empty space.
bool circular_run_leaves_last_empty(const MultisetTuple& t, int n) {
  std::vector<int> prefs;
  for (const auto& ms : t) prefs.insert(prefs.end(), ms.begin(), ms.end());
  return park_circular(PreferenceFunction(std::move(prefs), n + 1)).unoccupied ==
         n + 1;
}

}  // namespace

BigInt orbit_count_formula(int n, const Partition& mu) {
  require_partition_of(n, mu);
  BigInt product = 1;
  for (int part : mu.parts()) product *= binomial(part + n, n);
  if (product % (n + 1) != 0)
    throw ConsistencyError("orbit formula: " + product.str() +
                           " is not divisible by " + std::to_string(n + 1));
  return product / (n + 1);
}

BigInt orbit_count_pollak(int n, const Partition& mu, int max_length) {
  require_partition_of(n, mu);
  if (n > max_length)
    throw PreconditionError("orbit_count_pollak: length " + std::to_string(n) +
                            " above the guard " + std::to_string(max_length));
  const int alphabet = n + 1;
  std::vector<std::vector<Multiset>> choices;
  for (int part : mu.parts()) {
    std::vector<Multiset> all;
    Multiset cur;
    multisets(part, 1, alphabet, cur, all);
    choices.push_back(std::move(all));
  }

  // A tuple stands for its rotation class when it is the lexicographically
  // smallest member. Rotation acts freely (a stabiliser order would divide
  // both n and n+1), so each class has n+1 distinct members.
  BigInt classes = 0;
  MultisetTuple current;
  auto visit = [&](const MultisetTuple& t) {
    int parking_members = 0;
    for (int shift = 0; shift < alphabet; ++shift) {
      auto r = rotate_tuple(t, shift, alphabet);
      if (shift > 0 && r < t) return;
      parking_members += circular_run_leaves_last_empty(r, n);
    }
    if (parking_members != 1)
      throw ConsistencyError("rotation class with " +
                             std::to_string(parking_members) +
                             " parking members");
    ++classes;
  };
  auto rec = [&](auto&& self, size_t block) -> void {
    if (block == choices.size()) {
      visit(current);
      return;
    }
    for (const auto& ms : choices[block]) {
      current.push_back(ms);
      self(self, block + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return classes;
}

}  // namespace frob::parking
