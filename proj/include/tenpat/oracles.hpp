#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tenpat/core.hpp"
#include "tenpat/exact.hpp"

namespace tenpat::oracles {

// Brute-force reference implementations. Each one takes the most naive route
// available so it shares no code path with the algorithm it is used to
// check; all of them are serial and only meant for desk-scale inputs.

// Containment by enumerating every tuple of strictly increasing selections
// and testing entrywise domination directly.
bool contains_by_enumeration(const BitTensor& m, const BitTensor& p);

// The first dominating selection tuple in lexicographic tuple order, or
// nothing; the reference for witness minimality.
std::optional<std::vector<std::vector<int>>> first_embedding_by_enumeration(
    const BitTensor& m, const BitTensor& p);

// Maximum ones over all n x ... x n tensors (t axes) avoiding p, by plain
// enumeration of all 2^(n^t) candidates.
long long max_ones_avoiding_by_enumeration(int n, const BitTensor& p, int t);

// Number of order-n Latin squares via row-by-row backtracking on the symbol
// array (independent of the line-mask tensor enumerator).
std::uint64_t count_latin_squares(int n);

// k-cliques of the balanced complete t-partite graph on n vertices, counted
// by explicit clique extension on an adjacency matrix.
BigInt count_turan_cliques(int n, int t, unsigned long k);

// All (s, n_k..n_{k-s}) tuples that satisfy the cascade side conditions and
// sum to m, found by exhaustive search. Each result is the list of (level,
// value) pairs from level k downward.
std::vector<std::vector<std::pair<int, long long>>> all_cascade_representations(
    std::uint64_t m, int k, int t);

}  // namespace tenpat::oracles
