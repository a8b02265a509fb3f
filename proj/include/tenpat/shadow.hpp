#pragma once

#include <cstdint>
#include <vector>

#include "tenpat/core.hpp"
#include "tenpat/exact.hpp"

namespace tenpat {

// One term binom(n, level)_{colors} of a cascade representation; the color
// count is level-position dependent (t, t-1, ...) and lives in CascadeRep.
struct CascadeTerm {
  int level = 0;
  BigInt n;
};

// The unique decomposition m = binom(n_k,k)_t + binom(n_{k-1},k-1)_{t-1} + ...
// with n_{k-i} - floor(n_{k-i}/(t-i)) > n_{k-i-1} and a final level >= 1.
struct CascadeRep {
  int k = 0;
  int t = 0;
  std::vector<CascadeTerm> terms;

  BigInt total() const;
};

// Number of k-cliques of the balanced complete t-partite (Turan) graph on n
// vertices: the elementary symmetric polynomial e_k of the part sizes.
BigInt turan_binomial(const BigInt& n, int k, int t);
BigInt turan_binomial(std::uint64_t n, int k, int t);

// Greedy construction of the unique representation; every invariant of the
// result is re-verified and a violation raises invariant_error (it would
// contradict the representation lemma).
CascadeRep cascade_representation(const BigInt& m, int k, int t);

// Sum of binom(n_level, level+1) over the terms, one color level down the
// cascade: the upper bound on the number of (k+1)-faces.
BigInt shadow_upper_bound(const CascadeRep& rep);

// Face counts of the colored complex whose maximal faces are the 1-entries
// of M (vertex (r, i) for axis r, index i). counts[i-1] = number of i-faces.
struct FaceCounts {
  std::vector<std::uint64_t> counts;

  std::uint64_t cl(int i) const { return counts.at(static_cast<std::size_t>(i) - 1); }
  int top() const { return static_cast<int>(counts.size()); }
};

FaceCounts face_counts(const BitTensor& m);

// ones(M)^(t-1) <= 2^(t(t-1)) * ((sum of smash counts)/t)^t in
// cross-multiplied integer form. Requires t >= 3.
struct CorollaryCheck {
  BigInt lhs;  // t^t * ones^(t-1)
  BigInt rhs;  // 2^(t(t-1)) * (sum_r N_r)^t
  bool holds = false;
};

CorollaryCheck corollary_entry_bound(const BitTensor& m);

}  // namespace tenpat
