#pragma once

#include <string_view>
#include <vector>

#include "frobenius/parking.hpp"
#include "frobenius/setaction.hpp"

namespace frob::actions {

/// S_n permuting {1..n}.
FiniteAction natural(int n);
/// S_n fixing a single point.
FiniteAction trivial(int n);
/// S_4 -> S_3 with kernel the Klein four-group:
/// s1 -> (1 2), s2 -> (2 3), s3 -> (1 2).
FiniteAction klein_quotient();
/// S_n on k-subsets of {1..n}, subsets indexed in lexicographic order.
FiniteAction subsets(int n, int k);
/// S_n on parking functions of length n (lexicographic indexing) by
/// permuting arguments: (s_i f)(j) = f(s_i(j)).
FiniteAction parking_action(int n, int max_length = parking::kDefaultMaxLength);

/// k-subsets of {1..n} (1-based elements), lexicographic.
std::vector<std::vector<int>> k_subsets(int n, int k);

/// Parses "trivial:n", "natural:n", "subsets:n:k", "parking:n" or "klein".
/// Throws PreconditionError on an unknown name or malformed argument.
/// When the action would have more than `max_ground_set` points the call is
/// refused before the ground set is built.
FiniteAction from_name(std::string_view name, long max_ground_set);

/// Ground-set size of a named built-in, computed without building it.
BigInt ground_size_of(std::string_view name);

}  // namespace frob::actions
