#include "frobenius/symfunc.hpp"

#include <cctype>
#include <memory>
#include <mutex>

#include "frobenius/character_table.hpp"

namespace frob {

char basis_tag(Basis b) {
  switch (b) {
    case Basis::P: return 'p';
    case Basis::M: return 'm';
    case Basis::H: return 'h';
    case Basis::E: return 'e';
    case Basis::S: return 's';
  }
  return '?';
}

Basis parse_basis(std::string_view tag) {
  if (tag.size() == 1) {
    switch (std::tolower(static_cast<unsigned char>(tag[0]))) {
      case 'p': return Basis::P;
      case 'm': return Basis::M;
      case 'h': return Basis::H;
      case 'e': return Basis::E;
      case 's': return Basis::S;
      default: break;
    }
  }
  throw PreconditionError("unknown basis '" + std::string(tag) +
                          "' (expected one of p, m, h, e, s)");
}

SymFunc::SymFunc(Basis basis, int degree) : basis_(basis), degree_(degree) {
  if (degree < 0) throw PreconditionError("negative degree");
}

SymFunc::SymFunc(Basis basis, int degree, Terms terms)
    : basis_(basis), degree_(degree), terms_(std::move(terms)) {
  if (degree < 0) throw PreconditionError("negative degree");
  for (const auto& [lambda, c] : terms_)
    if (lambda.weight() != degree_)
      throw PreconditionError("inhomogeneous symmetric function: weights " +
                              std::to_string(degree_) + " and " +
                              std::to_string(lambda.weight()));
  drop_zeros();
}

SymFunc SymFunc::from_terms(
    Basis basis, const std::vector<std::pair<Partition, Rational>>& terms) {
  if (terms.empty())
    throw PreconditionError("cannot infer the degree of an empty term list");
  const int degree = terms.front().first.weight();
  Terms acc;
  for (const auto& [lambda, c] : terms) {
    if (lambda.weight() != degree)
      throw PreconditionError("inhomogeneous symmetric function: weights " +
                              std::to_string(degree) + " and " +
                              std::to_string(lambda.weight()));
    acc[lambda] += c;
  }
  return SymFunc(basis, degree, std::move(acc));
}

SymFunc SymFunc::basis_element(Basis basis, const Partition& lambda) {
  return SymFunc(basis, lambda.weight(), Terms{{lambda, Rational(1)}});
}

SymFunc SymFunc::from_coefficients(Basis basis, int degree,
                                   const RationalRow& coefficients) {
  const auto parts = partitions_of(degree);
  if (coefficients.size() != static_cast<Eigen::Index>(parts.size()))
    throw PreconditionError("coefficient vector has the wrong length");
  Terms terms;
  for (size_t i = 0; i < parts.size(); ++i) {
    const auto& c = coefficients(static_cast<Eigen::Index>(i));
    if (c != 0) terms.emplace(parts[i], c);
  }
  return SymFunc(basis, degree, std::move(terms));
}

Rational SymFunc::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

RationalRow SymFunc::coefficients() const {
  const auto parts = partitions_of(degree_);
  RationalRow row(static_cast<Eigen::Index>(parts.size()));
  for (Eigen::Index i = 0; i < row.size(); ++i)
    row(i) = coeff(parts[static_cast<size_t>(i)]);
  return row;
}

bool SymFunc::same_terms(const SymFunc& other) const {
  return basis_ == other.basis_ && degree_ == other.degree_ &&
         terms_ == other.terms_;
}

SymFunc& SymFunc::operator+=(const SymFunc& rhs) {
  if (rhs.degree_ != degree_)
    throw PreconditionError("adding symmetric functions of different degrees");
  const SymFunc other = rhs.basis_ == basis_ ? rhs : convert(rhs, basis_);
  for (const auto& [lambda, c] : other.terms_) terms_[lambda] += c;
  drop_zeros();
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& rhs) {
  return *this += Rational(-1) * rhs;
}

SymFunc& SymFunc::operator*=(const Rational& c) {
  for (auto& [lambda, coeff] : terms_) coeff *= c;
  drop_zeros();
  return *this;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
  if (a.degree() != b.degree()) return a.is_zero() && b.is_zero();
  return convert(a, Basis::P).terms() == convert(b, Basis::P).terms();
}

void SymFunc::drop_zeros() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

SymFunc power_sum_product(const SymFunc& a, const SymFunc& b) {
  if (a.basis() != Basis::P || b.basis() != Basis::P)
    throw PreconditionError("power_sum_product expects P-basis operands");
  SymFunc::Terms terms;
  for (const auto& [alpha, ca] : a.terms())
    for (const auto& [beta, cb] : b.terms()) terms[join(alpha, beta)] += ca * cb;
  return SymFunc(Basis::P, a.degree() + b.degree(), std::move(terms));
}

namespace {

void require_same_weight(const Partition& lambda, const Partition& mu,
                         const char* what) {
  if (lambda.weight() != mu.weight())
    throw PreconditionError(std::string(what) + ": " + lambda.str() + " and " +
                            mu.str() + " have different weights");
}

void count_maps(std::span<const int> parts, size_t next,
                std::vector<int>& capacity, BigInt& count) {
  if (next == parts.size()) {
    ++count;
    return;
  }
  for (int& cap : capacity) {
    if (cap < parts[next]) continue;
    cap -= parts[next];
    count_maps(parts, next + 1, capacity, count);
    cap += parts[next];
  }
}

// Walks sequences (mu^(1), ..., mu^(l)) with mu^(i) |- mu_i while tracking how
// many parts of each size are still unused from lambda.
void sum_splittings(const Partition& mu, size_t block,
                    std::vector<int>& remaining,
                    std::vector<std::vector<int>>& used_per_size,
                    const Partition& lambda, BigInt& total) {
  if (block == static_cast<size_t>(mu.length())) {
    BigInt term = 1;
    for (size_t s = 1; s < remaining.size(); ++s) {
      if (remaining[s] != 0) return;
      term *= multinomial(lambda.multiplicity(static_cast<int>(s)),
                          used_per_size[s]);
    }
    total += term;
    return;
  }
  for (const auto& piece : partitions_of(mu[static_cast<int>(block)])) {
    bool fits = true;
    for (size_t s = 1; s < remaining.size(); ++s) {
      const int k = piece.multiplicity(static_cast<int>(s));
      if (k > remaining[s]) fits = false;
    }
    if (!fits) continue;
    for (size_t s = 1; s < remaining.size(); ++s) {
      const int k = piece.multiplicity(static_cast<int>(s));
      remaining[s] -= k;
      used_per_size[s].push_back(k);
    }
    sum_splittings(mu, block + 1, remaining, used_per_size, lambda, total);
    for (size_t s = 1; s < remaining.size(); ++s) {
      remaining[s] += used_per_size[s].back();
      used_per_size[s].pop_back();
    }
  }
}

}  // namespace

BigInt l_coefficient(const Partition& lambda, const Partition& mu) {
  require_same_weight(lambda, mu, "l_coefficient");
  std::vector<int> capacity(mu.parts().begin(), mu.parts().end());
  BigInt count = 0;
  count_maps(lambda.parts(), 0, capacity, count);
  return count;
}

BigInt l_via_splitting(const Partition& lambda, const Partition& mu) {
  require_same_weight(lambda, mu, "l_via_splitting");
  const int n = lambda.weight();
  std::vector<int> remaining(static_cast<size_t>(n + 1), 0);
  for (int s = 1; s <= n; ++s) remaining[static_cast<size_t>(s)] = lambda.multiplicity(s);
  std::vector<std::vector<int>> used(static_cast<size_t>(n + 1));
  BigInt total = 0;
  sum_splittings(mu, 0, remaining, used, lambda, total);
  return total;
}

namespace {

SymFunc single_row_in_p(Basis basis, int k) {
  SymFunc::Terms terms;
  for (const auto& nu : partitions_of(k)) {
    Rational c(BigInt(1), z(nu));
    if (basis == Basis::E && (k - nu.length()) % 2 != 0) c = -c;
    terms.emplace(nu, c);
  }
  return SymFunc(Basis::P, k, std::move(terms));
}

RationalMatrix build_expansion(Basis basis, int n) {
  const auto parts = partitions_of(n);
  const auto p = static_cast<Eigen::Index>(parts.size());
  RationalMatrix out = RationalMatrix::Zero(p, p);
  if (basis == Basis::P) return RationalMatrix::Identity(p, p);
  if (basis == Basis::S) {
    const auto& chi = character_table(n);
    for (Eigen::Index i = 0; i < p; ++i)
      for (Eigen::Index j = 0; j < p; ++j)
        out(i, j) = Rational(BigInt(chi.values()(i, j)),
                             z(parts[static_cast<size_t>(j)]));
    return out;
  }
  // h_lambda and e_lambda are products of the one-row functions.
  for (Eigen::Index i = 0; i < p; ++i) {
    SymFunc prod = SymFunc::basis_element(Basis::P, Partition{});
    for (int k : parts[static_cast<size_t>(i)].parts())
      prod = power_sum_product(prod, single_row_in_p(basis, k));
    out.row(i) = prod.coefficients();
  }
  return out;
}

struct MatrixCache {
  std::mutex mutex;
  std::map<std::pair<int, int>, std::unique_ptr<RationalMatrix>> entries;

  template <class Build>
  const RationalMatrix& get(int key, int n, Build build) {
    std::lock_guard lock(mutex);
    auto& slot = entries[{key, n}];
    if (!slot) slot = std::make_unique<RationalMatrix>(build());
    return *slot;
  }
};

MatrixCache& matrix_cache() {
  static MatrixCache cache;
  return cache;
}

RationalRow to_power_sums(const SymFunc& f) {
  const RationalRow c = f.coefficients();
  const int n = f.degree();
  if (f.basis() == Basis::P) return c;
  if (f.basis() == Basis::M) {
    // sum_mu c_mu m_mu = sum_lambda x_lambda p_lambda with x L = c.
    const RationalMatrix x =
        solve_exact(cached_l_matrix(n).transpose(), c.transpose());
    return x.transpose();
  }
  return c * power_sum_expansion_matrix(f.basis(), n);
}

RationalRow from_power_sums(const RationalRow& c, int n, Basis target) {
  switch (target) {
    case Basis::P:
      return c;
    case Basis::M:
      return c * cached_l_matrix(n);
    case Basis::S: {
      // coefficient of s_lambda is sum_mu c_mu chi^lambda(mu).
      const auto& chi = character_table(n).values();
      RationalRow out(c.size());
      for (Eigen::Index l = 0; l < c.size(); ++l) {
        Rational acc = 0;
        for (Eigen::Index m = 0; m < c.size(); ++m)
          if (chi(l, m) != 0) acc += c(m) * Rational(chi(l, m));
        out(l) = acc;
      }
      return out;
    }
    case Basis::H:
    case Basis::E: {
      const RationalMatrix x = solve_exact(
          power_sum_expansion_matrix(target, n).transpose(), c.transpose());
      return x.transpose();
    }
  }
  throw PreconditionError("unknown basis");
}

}  // namespace

const RationalMatrix& power_sum_expansion_matrix(Basis basis, int n) {
  if (basis == Basis::M)
    throw PreconditionError(
        "power_sum_expansion_matrix: the M basis has no forward expansion");
  return matrix_cache().get(static_cast<int>(basis), n,
                            [&] { return build_expansion(basis, n); });
}

const RationalMatrix& cached_l_matrix(int n) {
  return matrix_cache().get(static_cast<int>(Basis::M), n,
                            [&] { return l_matrix<Rational>(n); });
}

SymFunc p_to_m(const SymFunc& f) {
  if (f.basis() != Basis::P)
    throw PreconditionError("p_to_m expects a P-basis input");
  SymFunc::Terms terms;
  for (const auto& [lambda, c] : f.terms())
    for (const auto& mu : partitions_of(f.degree())) {
      const BigInt l = l_coefficient(lambda, mu);
      if (l != 0) terms[mu] += c * Rational(l);
    }
  return SymFunc(Basis::M, f.degree(), std::move(terms));
}

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  const int n = f.degree();
  if (f.is_zero()) return SymFunc(target, n);
  if (f.basis() == Basis::P && target == Basis::M) return p_to_m(f);
  return SymFunc::from_coefficients(target, n,
                                    from_power_sums(to_power_sums(f), n, target));
}

Rational inner_product(const SymFunc& f, const SymFunc& g) {
  if (f.degree() != g.degree())
    throw PreconditionError("inner_product: degrees " +
                            std::to_string(f.degree()) + " and " +
                            std::to_string(g.degree()));
  const SymFunc fp = convert(f, Basis::P);
  const SymFunc gp = convert(g, Basis::P);
  Rational acc = 0;
  for (const auto& [lambda, c] : fp.terms())
    acc += c * gp.coeff(lambda) * Rational(z(lambda));
  return acc;
}

}  // namespace frob
