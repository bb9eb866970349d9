#include "frobenius/setaction.hpp"

#include <numeric>

namespace frob {

FiniteAction::FiniteAction(int n, int m, std::vector<Permutation> gens)
    : n_(n), m_(m), gens_(std::move(gens)) {
  if (n < 1) throw PreconditionError("action rank must be at least 1");
  if (m < 0) throw PreconditionError("ground set size must be nonnegative");
  if (static_cast<int>(gens_.size()) != n - 1)
    throw PreconditionError("expected " + std::to_string(n - 1) +
                            " generator images, got " +
                            std::to_string(gens_.size()));
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].size() != m)
      throw PreconditionError("generator " + std::to_string(i + 1) + " acts on " +
                              std::to_string(gens_[i].size()) +
                              " points, expected " + std::to_string(m));
}

std::optional<RelationViolation> validate(const FiniteAction& a) {
  const auto& g = a.generators();
  const int k = static_cast<int>(g.size());
  auto name = [](int i) { return "s" + std::to_string(i + 1); };
  for (int i = 0; i < k; ++i)
    if (!(g[i] * g[i]).is_identity()) return RelationViolation{name(i) + "^2"};
  for (int i = 0; i + 1 < k; ++i)
    if (g[i] * g[i + 1] * g[i] != g[i + 1] * g[i] * g[i + 1])
      return RelationViolation{name(i) + " " + name(i + 1) + " " + name(i) +
                               " = " + name(i + 1) + " " + name(i) + " " +
                               name(i + 1)};
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j)
      if (g[i] * g[j] != g[j] * g[i])
        return RelationViolation{name(i) + " " + name(j) + " = " + name(j) +
                                 " " + name(i)};
  return std::nullopt;
}

void require_valid(const FiniteAction& a) {
  if (auto v = validate(a)) throw ValidationError(*v);
}

Permutation image_of_word(const FiniteAction& a, std::span<const int> word) {
  // Applying right-to-left to every point avoids materialising partial
  // products.
  std::vector<int> images(static_cast<size_t>(a.ground_size()));
  std::iota(images.begin(), images.end(), 0);
  const auto& gens = a.generators();
  for (int& x : images)
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (*it < 0 || *it >= a.rank() - 1)
        throw PreconditionError("word letter out of range");
      x = gens[static_cast<size_t>(*it)](x);
    }
  return Permutation(std::move(images));
}

Permutation image_of(const FiniteAction& a, const Permutation& g) {
  if (g.size() != a.rank())
    throw PreconditionError("image_of: permutation degree differs from rank");
  return image_of_word(a, adjacent_transposition_word(g));
}

long fixed_points(const FiniteAction& a, const Partition& lambda) {
  if (lambda.weight() != a.rank())
    throw PreconditionError("fixed_points: " + lambda.str() +
                            " is not a partition of " + std::to_string(a.rank()));
  return image_of(a, canonical_permutation(lambda)).fixed_point_count();
}

SymFunc frobenius_p(const FiniteAction& a) {
  SymFunc::Terms terms;
  for (const auto& lambda : partitions_of(a.rank()))
    terms.emplace(lambda, Rational(BigInt(fixed_points(a, lambda)), z(lambda)));
  return SymFunc(Basis::P, a.rank(), std::move(terms));
}

YoungSubgroup::YoungSubgroup(Partition mu) : mu_(std::move(mu)) {
  int start = 0;
  for (int len : mu_.parts()) {
    blocks_.emplace_back(start, start + len);
    start += len;
  }
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int size) : parent_(static_cast<size_t>(size)), count_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<size_t>(x)] != x) {
      auto& p = parent_[static_cast<size_t>(x)];
      p = parent_[static_cast<size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    parent_[static_cast<size_t>(std::max(x, y))] = std::min(x, y);
    --count_;
  }
  int count() const { return count_; }

 private:
  std::vector<int> parent_;
  int count_;
};

}  // namespace

BigInt block_subgroup_orbits(const FiniteAction& a,
                             std::span<const int> block_sizes) {
  int total = 0;
  for (int b : block_sizes) {
    if (b < 1) throw PreconditionError("block sizes must be positive");
    total += b;
  }
  if (total != a.rank())
    throw PreconditionError("block sizes sum to " + std::to_string(total) +
                            ", expected " + std::to_string(a.rank()));
  DisjointSets sets(a.ground_size());
  int start = 0;
  for (int b : block_sizes) {
    for (int i = start; i + 1 < start + b; ++i) {
      const auto& g = a.generators()[static_cast<size_t>(i)];
      for (int x = 0; x < a.ground_size(); ++x) sets.unite(x, g(x));
    }
    start += b;
  }
  return BigInt(sets.count());
}

BigInt young_orbits(const FiniteAction& a, const YoungSubgroup& y) {
  return block_subgroup_orbits(a, y.mu().parts());
}

ClassProfile::ClassProfile(const Partition& mu, std::vector<Partition> profile)
    : profile_(std::move(profile)) {
  if (static_cast<int>(profile_.size()) != mu.length())
    throw PreconditionError("class profile needs one partition per block");
  for (int i = 0; i < mu.length(); ++i)
    if (profile_[static_cast<size_t>(i)].weight() != mu[i])
      throw PreconditionError("class profile block " + std::to_string(i + 1) +
                              " has weight " +
                              std::to_string(profile_[static_cast<size_t>(i)].weight()) +
                              ", expected " + std::to_string(mu[i]));
}

Permutation ClassProfile::representative() const {
  std::vector<int> images;
  for (const auto& block : profile_) {
    const int offset = static_cast<int>(images.size());
    const auto local = canonical_permutation(block);
    for (int v : local.images()) images.push_back(v + offset);
  }
  return Permutation(std::move(images));
}

BigInt ClassProfile::centraliser_order() const {
  BigInt r = 1;
  for (const auto& block : profile_) r *= z(block);
  return r;
}

Partition ClassProfile::cycle_type() const {
  Partition all;
  for (const auto& block : profile_) all = join(all, block);
  return all;
}

std::vector<ClassProfile> class_profiles(const Partition& mu) {
  std::vector<std::vector<Partition>> choices;
  for (int part : mu.parts()) choices.push_back(partitions_of(part));
  std::vector<ClassProfile> out;
  std::vector<Partition> current;
  auto rec = [&](auto&& self, size_t block) -> void {
    if (block == choices.size()) {
      out.emplace_back(mu, current);
      return;
    }
    for (const auto& piece : choices[block]) {
      current.push_back(piece);
      self(self, block + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

BigInt burnside_orbits(const FiniteAction& a, const YoungSubgroup& y) {
  Rational total = 0;
  for (const auto& profile : class_profiles(y.mu())) {
    const long fix = image_of(a, profile.representative()).fixed_point_count();
    total += Rational(BigInt(fix), profile.centraliser_order());
  }
  if (!is_integer(total))
    throw ConsistencyError("Burnside total " + to_string(total) + " for " +
                           y.mu().str() + " is not an integer");
  return numerator(total);
}

SymFunc frobenius_m(const FiniteAction& a) {
  SymFunc::Terms terms;
  for (const auto& [mu, count] : orbit_report(a)) terms.emplace(mu, Rational(count));
  return SymFunc(Basis::M, a.rank(), std::move(terms));
}

OrbitReport orbit_report(const FiniteAction& a) {
  OrbitReport report;
  for (const auto& mu : partitions_of(a.rank()))
    report.emplace(mu, young_orbits(a, YoungSubgroup(mu)));
  return report;
}

}  // namespace frob
