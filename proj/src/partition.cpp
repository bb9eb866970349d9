#include "frobenius/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace frob {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw PreconditionError("partition parts must be positive: " + str());
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw PreconditionError("partition parts must be weakly decreasing: " +
                              str());
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::ones(int n) {
  return Partition(std::vector<int>(static_cast<size_t>(n), 1));
}

int Partition::multiplicity(int s) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), s));
}

std::string Partition::str() const {
  std::string out = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& prefix,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw PreconditionError("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate(n, n, prefix, out);
  return out;
}

int partition_index(const Partition& lambda) {
  static std::mutex mutex;
  static std::map<int, std::map<Partition, int>> cache;
  std::lock_guard lock(mutex);
  auto& table = cache[lambda.weight()];
  if (table.empty()) {
    auto all = partitions_of(lambda.weight());
    for (size_t i = 0; i < all.size(); ++i)
      table.emplace(all[i], static_cast<int>(i));
  }
  return table.at(lambda);
}

BigInt z(const Partition& lambda) {
  BigInt r = 1;
  auto parts = lambda.parts();
  for (size_t i = 0; i < parts.size();) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int s = parts[i];
    const int m = static_cast<int>(j - i);
    r *= boost::multiprecision::pow(BigInt(s), static_cast<unsigned>(m));
    r *= factorial(m);
    i = j;
  }
  return r;
}

int multiplicity(const Partition& lambda, int s) {
  if (s < 1) throw PreconditionError("multiplicity: part size must be >= 1");
  return lambda.multiplicity(s);
}

BigInt multinomial(int top, std::span<const int> bottoms) {
  long sum = 0;
  for (int b : bottoms) {
    if (b < 0) throw PreconditionError("multinomial: negative entry");
    sum += b;
  }
  if (sum != top)
    throw PreconditionError("multinomial: entries sum to " +
                            std::to_string(sum) + ", expected " +
                            std::to_string(top));
  BigInt r = factorial(top);
  for (int b : bottoms) r /= factorial(b);
  return r;
}

Partition join(const Partition& a, const Partition& b) {
  std::vector<int> parts(a.parts().begin(), a.parts().end());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition::from_unsorted(std::move(parts));
}

}  // namespace frob
