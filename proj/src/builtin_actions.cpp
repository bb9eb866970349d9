#include "frobenius/builtin_actions.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace frob::actions {

FiniteAction natural(int n) {
  if (n < 1) throw PreconditionError("natural: n must be at least 1");
  std::vector<Permutation> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back(Permutation::transposition(n, i, i + 1));
  return FiniteAction(n, n, std::move(gens));
}

FiniteAction trivial(int n) {
  if (n < 1) throw PreconditionError("trivial: n must be at least 1");
  return FiniteAction(n, 1, std::vector<Permutation>(static_cast<size_t>(n - 1),
                                                     Permutation::identity(1)));
}

FiniteAction klein_quotient() {
  const auto a = Permutation::transposition(3, 0, 1);
  const auto b = Permutation::transposition(3, 1, 2);
  return FiniteAction(4, 3, {a, b, a});
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n - (k - static_cast<int>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

FiniteAction subsets(int n, int k) {
  if (n < 1 || k < 0 || k > n)
    throw PreconditionError("subsets: need n >= 1 and 0 <= k <= n, got n=" +
                            std::to_string(n) + " k=" + std::to_string(k));
  const auto all = k_subsets(n, k);
  auto index_of = [&](const std::vector<int>& s) {
    return static_cast<int>(std::lower_bound(all.begin(), all.end(), s) - all.begin());
  };
  std::vector<Permutation> gens;
  for (int i = 1; i < n; ++i) {
    std::vector<int> images;
    for (const auto& s : all) {
      std::vector<int> t(s);
      for (int& v : t) v = v == i ? i + 1 : v == i + 1 ? i : v;
      std::sort(t.begin(), t.end());
      images.push_back(index_of(t));
    }
    gens.emplace_back(std::move(images));
  }
  return FiniteAction(n, static_cast<int>(all.size()), std::move(gens));
}

FiniteAction parking_action(int n, int max_length) {
  const auto all = parking::generate_all(n, max_length);
  auto index_of = [&](const parking::PreferenceFunction& f) {
    return static_cast<int>(std::lower_bound(all.begin(), all.end(), f) - all.begin());
  };
  std::vector<Permutation> gens;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> images;
    images.reserve(all.size());
    for (const auto& f : all) {
      auto prefs = f.prefs();
      std::swap(prefs[static_cast<size_t>(i)], prefs[static_cast<size_t>(i + 1)]);
      images.push_back(index_of(parking::PreferenceFunction(std::move(prefs))));
    }
    gens.emplace_back(std::move(images));
  }
  return FiniteAction(n, static_cast<int>(all.size()), std::move(gens));
}

namespace {

struct ParsedName {
  std::string kind;
  std::vector<int> args;
};

ParsedName parse_name(std::string_view name) {
  ParsedName out;
  auto colon = name.find(':');
  out.kind = std::string(name.substr(0, colon));
  while (colon != std::string_view::npos) {
    name.remove_prefix(colon + 1);
    colon = name.find(':');
    auto field = name.substr(0, colon);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
      throw PreconditionError("malformed built-in argument '" + std::string(field) + "'");
    out.args.push_back(value);
  }
  const size_t expected = out.kind == "klein"                               ? 0
                          : out.kind == "subsets"                           ? 2
                          : out.kind == "trivial" || out.kind == "natural" ||
                                    out.kind == "parking"
                              ? 1
                              : static_cast<size_t>(-1);
  if (expected == static_cast<size_t>(-1))
    throw PreconditionError("unknown built-in action '" + out.kind +
                            "' (expected trivial:n, natural:n, subsets:n:k, "
                            "parking:n or klein)");
  if (out.args.size() != expected)
    throw PreconditionError("built-in '" + out.kind + "' takes " +
                            std::to_string(expected) + " argument(s)");
  return out;
}

}  // namespace

BigInt ground_size_of(std::string_view name) {
  const auto p = parse_name(name);
  if (p.kind == "klein") return 3;
  if (p.kind == "trivial") return 1;
  if (p.kind == "natural") return p.args[0];
  if (p.kind == "subsets") {
    const int n = p.args[0], k = p.args[1];
    if (n < 1 || k < 0 || k > n) throw PreconditionError("subsets: need 0 <= k <= n");
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }
  return parking::count_formula(p.args[0]);
}

FiniteAction from_name(std::string_view name, long max_ground_set) {
  const auto p = parse_name(name);
  const BigInt size = ground_size_of(name);
  if (size > max_ground_set)
    throw PreconditionError("action '" + std::string(name) + "' has " + size.str() +
                            " points, above --max-ground-set " +
                            std::to_string(max_ground_set));
  if (p.kind == "klein") return klein_quotient();
  if (p.kind == "trivial") return trivial(p.args[0]);
  if (p.kind == "natural") return natural(p.args[0]);
  if (p.kind == "subsets") return subsets(p.args[0], p.args[1]);
  // The ground-set guard above is the binding limit here.
  return parking_action(p.args[0], std::max(p.args[0], 1));
}

}  // namespace frob::actions
