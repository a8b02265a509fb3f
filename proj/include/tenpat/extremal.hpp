#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tenpat/containment.hpp"
#include "tenpat/core.hpp"
#include "tenpat/exact.hpp"
#include "tenpat/pattern.hpp"

namespace tenpat {

constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 62;

// Result of an extremal search or count. value == -1 means no tensor at all
// satisfies the constraint (possible only for patterns with no 1-entries).
// When a node budget truncates the search, exact is false and value is the
// best lower bound found.
struct SearchReport {
  long long value = -1;
  std::optional<BitTensor> witness;
  std::uint64_t nodes = 0;
  bool exact = true;
};

// Maximum number of ones in an n x ... x n t-dimensional tensor avoiding P,
// by branch and bound: cells in lexicographic order, 1-branch first, pruned
// by remaining capacity against the incumbent and by containment of the
// partial tensor. t=2 searches seed the incumbent with the anti-diagonal
// staircase band when it avoids P.
SearchReport f_exact(int n, const Pattern& p, int t,
                     std::uint64_t node_budget = kDefaultSearchBudget, int threads = 1,
                     std::uint64_t cap_cells = kDefaultCellCap);
SearchReport f_exact_serial(int n, const Pattern& p, int t,
                            std::uint64_t node_budget = kDefaultSearchBudget,
                            std::uint64_t cap_cells = kDefaultCellCap);

// |T_t(n, P)|: the number of n x ... x n tensors avoiding P, by enumeration.
std::uint64_t count_avoiders(int n, const Pattern& p, int t, int threads = 1,
                             std::uint64_t cap_cells = kDefaultCellCap);
std::uint64_t count_avoiders_serial(int n, const Pattern& p, int t,
                                    std::uint64_t cap_cells = kDefaultCellCap);

// Contract 2 x ... x 2 blocks to single entries (the doubling map); dims
// must all be even.
BitTensor klazar_contract(const BitTensor& m);

// Exact check of |T(2n)| <= |T(n)| * (2^(2^t) - 1)^{f(n)}.
struct KlazarCheck {
  BigInt lhs;           // |T_t(2n, P)|
  BigInt rhs;           // |T_t(n, P)| * (2^(2^t)-1)^{f_t(n,P)}
  bool holds = false;
  std::uint64_t avoiders_n = 0;
  long long f_value = 0;
};

KlazarCheck klazar_check(int n, const Pattern& p, int t, int threads = 1,
                         std::uint64_t cap_cells = kDefaultCellCap);

// Slice-reduction inequality f_t(n,P) <= n * f_{t-1}(n,P') where P' is the
// (s, c_s)-slice of P at a core axis s. P must be a sunflower with non-empty
// core; a core may be supplied explicitly for degenerate patterns whose
// minimal core is empty. The inequality is guaranteed only when every core
// axis of P has extent 1: padding hyperplanes on a core axis leave slices
// near the boundary unconstrained and the bound can genuinely fail (the
// check still reports such cases faithfully with holds = false).
struct SunflowerReduction {
  long long lhs = 0;  // f_t(n, P)
  long long rhs = 0;  // n * f_{t-1}(n, P')
  bool holds = false;
  int core_axis = -1;
  BitTensor reduced_pattern;
};

SunflowerReduction sunflower_reduction_check(
    int n, const Pattern& p, std::optional<SunflowerSpec> core_override = std::nullopt,
    std::uint64_t node_budget = kDefaultSearchBudget, int threads = 1,
    std::uint64_t cap_cells = kDefaultCellCap);

// Order-n t-dimensional Latin matrices (exactly one 1 per axis line),
// enumerated by layer-by-layer backtracking in deterministic order.
// Enumeration reach: n <= 6 at t=2, n <= 4 at t=3, n <= 2 above;
// override_reach lifts the table (the run may then take arbitrarily long,
// only hard sanity bounds remain).
void latin_enumerate(int n, int t, const std::function<void(const BitTensor&)>& fn,
                     bool override_reach = false);
std::vector<BitTensor> latin_matrices(int n, int t, bool override_reach = false);
std::uint64_t latin_count(int n, int t, int threads = 1, bool override_reach = false);
std::uint64_t latin_count_serial(int n, int t);

// Latin matrices avoiding P.
std::uint64_t latin_count_avoiders(int n, int t, const Pattern& p, int threads = 1,
                                   bool override_reach = false);
std::uint64_t latin_count_avoiders_serial(int n, int t, const Pattern& p);

}  // namespace tenpat
