#pragma once

// Brute-force reference computations. Each one reaches its answer by a route
// that shares no code path with the library operation it is compared with.

#include <map>
#include <span>
#include <vector>

#include "frobenius/numeric.hpp"
#include "frobenius/partition.hpp"
#include "frobenius/permutation.hpp"
#include "frobenius/setaction.hpp"

namespace frob::oracle {

/// Partitions of n by filtering every weakly decreasing sequence produced by
/// extending partitions of smaller numbers; returned sorted largest-first.
std::vector<Partition> partitions_by_extension(int n);

/// p(n) from Euler's pentagonal number recurrence.
long partition_count(int n);

/// Dimension of the irreducible S_n module via the hook length formula.
BigInt hook_length_dimension(const Partition& lambda);

/// L_{lambda mu} by trying every one of l(mu)^l(lambda) maps.
BigInt l_by_all_maps(const Partition& lambda, const Partition& mu);

/// Coefficient of x^mu in p_lambda(x_1..x_l(mu)), by multiplying out the
/// power sums as explicit polynomials.
BigInt l_by_polynomial_expansion(const Partition& lambda, const Partition& mu);

/// Word in adjacent transpositions built from the cycle decomposition: each
/// cycle is a product of transpositions, each transposition (a b) a
/// palindrome of adjacent swaps. Not reduced in general.
std::vector<int> cycle_word(const Permutation& g);

/// #(M/S_blocks) by plain Burnside averaging over every element of the
/// block subgroup. Elements act through cycle_word.
BigInt element_burnside_orbits(const FiniteAction& a,
                               std::span<const int> block_sizes);

/// Parking test by the sorted characterisation: the i-th smallest
/// preference is at most i.
bool parking_by_sorting(std::span<const int> prefs);

}  // namespace frob::oracle
