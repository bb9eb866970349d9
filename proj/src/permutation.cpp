#include "frobenius/permutation.hpp"

#include <algorithm>

namespace frob {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<size_t>(v)])
      throw PreconditionError("images do not form a bijection");
    seen[static_cast<size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> images(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) images[static_cast<size_t>(i)] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<int> zero(images.begin(), images.end());
  for (int& v : zero) --v;
  return Permutation(std::move(zero));
}

Permutation Permutation::transposition(int size, int a, int b) {
  auto p = identity(size);
  std::swap(p.images_[static_cast<size_t>(a)], p.images_[static_cast<size_t>(b)]);
  return p;
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(images_);
  for (int& v : out) ++v;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<size_t>(images_[static_cast<size_t>(i)])] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[static_cast<size_t>(i)] != i) return false;
  return true;
}

int Permutation::fixed_point_count() const {
  int count = 0;
  for (int i = 0; i < size(); ++i) count += images_[static_cast<size_t>(i)] == i;
  return count;
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.size() != rhs.size())
    throw PreconditionError("composing permutations of different degrees");
  std::vector<int> out(rhs.images_.size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = lhs.images_[static_cast<size_t>(rhs.images_[i])];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation canonical_permutation(const Partition& lambda) {
  std::vector<int> images(static_cast<size_t>(lambda.weight()));
  int start = 0;
  for (int len : lambda.parts()) {
    for (int k = 0; k < len; ++k)
      images[static_cast<size_t>(start + k)] = start + (k + 1) % len;
    start += len;
  }
  return Permutation(std::move(images));
}

Partition cycle_type(const Permutation& g) {
  std::vector<char> seen(static_cast<size_t>(g.size()), 0);
  std::vector<int> lengths;
  for (int i = 0; i < g.size(); ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0;
    for (int x = i; !seen[static_cast<size_t>(x)]; x = g(x)) {
      seen[static_cast<size_t>(x)] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_unsorted(std::move(lengths));
}

std::vector<int> adjacent_transposition_word(const Permutation& g) {
  // Bubble-sort the one-line notation: right-multiplying by s_i swaps
  // positions i and i+1. When sorted, g * s_{j1} * ... * s_{jk} = id, so
  // g = s_{jk} * ... * s_{j1}.
  std::vector<int> line(g.images().begin(), g.images().end());
  std::vector<int> swaps;
  const int n = g.size();
  for (int pass = 0; pass < n; ++pass) {
    bool changed = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (line[static_cast<size_t>(i)] > line[static_cast<size_t>(i + 1)]) {
        std::swap(line[static_cast<size_t>(i)], line[static_cast<size_t>(i + 1)]);
        swaps.push_back(i);
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

}  // namespace frob
