#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tenpat/core.hpp"
#include "tenpat/exact.hpp"

namespace tenpat {

constexpr std::uint64_t kDefaultDivisionCap = std::uint64_t{1} << 26;

// A tuple of interval partitions, one per axis, stored as the interior cut
// positions: cuts[r] = (c_1 < ... < c_{k-1}) splits [0, dims[r]) into the
// intervals [0,c_1), [c_1,c_2), ..., [c_{k-1}, dims[r]).
struct Division {
  std::vector<std::vector<int>> cuts;

  // Number of intervals per axis.
  std::vector<int> parts() const;
  int interval_of(int axis, int index) const;
  void validate_for(const Shape& shape) const;

  bool operator==(const Division& other) const = default;
  bool operator<(const Division& other) const { return cuts < other.cuts; }
};

// binom(p-1, k-1)^t, the number of k x ... x k divisions of a p x ... x p
// matrix.
BigInt count_divisions(int p, int k, int t);

// Size of the k-division space of this shape; errors out when it does not
// fit the exhaustive enumerator.
std::uint64_t division_space_size(const Shape& shape, int k,
                                  std::uint64_t cap = kDefaultDivisionCap);

// Deterministic code <-> division bijection; ascending codes give divisions
// in lexicographic cut order.
Division division_from_code(const Shape& shape, int k, std::uint64_t code);
std::uint64_t division_code(const Shape& shape, int k, const Division& d);

void for_each_division(const Shape& shape, int k, const std::function<void(const Division&)>& fn,
                       std::uint64_t cap = kDefaultDivisionCap);

// The contraction M/D: entry 1 iff the corresponding cell holds at least one
// 1 of M.
BitTensor contract(const BitTensor& m, const Division& d);

bool is_full(const BitTensor& m, const Division& d);

// Lexicographically least full k x ... x k division, if any, by exhaustive
// enumeration. threads == 1 runs the serial reference path.
std::optional<Division> find_full_division(const BitTensor& m, int k, int threads = 1,
                                           std::uint64_t cap = kDefaultDivisionCap);
std::optional<Division> find_full_division_serial(const BitTensor& m, int k,
                                                  std::uint64_t cap = kDefaultDivisionCap);

// ones_count(M) > alpha_s(k) * n^(s-1), compared in exact rational
// arithmetic. Requires a cubic tensor with s >= 2.
bool is_heavy(const BitTensor& m, int k);

// Division into consecutive blocks of the given edge length (dims must be
// divisible by it).
Division uniform_blocks(const Shape& shape, int block);

// Composition: apply `outer` to the contracted shape of `inner`. The result
// partitions the original axes by merging inner intervals.
Division compose_divisions(const Shape& shape, const Division& inner, const Division& outer);

// Concatenate equal-shape blocks along `axis`.
BitTensor stack_blocks(const std::vector<BitTensor>& blocks, int axis);

struct PigeonholeExtraction {
  Division division;            // full division of the stacked matrix
  std::vector<int> block_indices;  // the k blocks that share the smash division
};

// Constructive route of the pigeonhole lemma: smash every block along
// `axis`, look for a (t-1)-dimensional k-division full in >= k of the
// smashes, and lift it to a full t-dimensional division of the stacked
// matrix. For block side <= 6 the full set of full divisions per smash is
// examined (exact sharing); above that only least witnesses are compared.
std::optional<PigeonholeExtraction> extract_full_division_pigeonhole(
    const std::vector<BitTensor>& blocks, int axis, int k);

}  // namespace tenpat
