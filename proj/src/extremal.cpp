#include "tenpat/extremal.hpp"

#include <algorithm>
#include <atomic>

#include "tenpat/division.hpp"
#include "tenpat/errors.hpp"
#include "tenpat/parallel.hpp"

namespace tenpat {

namespace {

std::vector<Coord> cells_in_order(const Shape& shape) {
  std::vector<Coord> cells;
  const std::uint64_t total = shape.cells();
  cells.reserve(total);
  Coord cur(shape.t(), 0);
  for (std::uint64_t i = 0; i < total; ++i) {
    cells.push_back(cur);
    for (int r = shape.t() - 1; r >= 0; --r) {
      if (++cur[r] < shape.dims[r]) break;
      cur[r] = 0;
    }
  }
  return cells;
}

// Anti-diagonal band i+j in {n-1, n}: 2n-1 ones, no strictly increasing
// pair, the classic maximal avoider of the 2x2 identity.
BitTensor staircase_band(int n) {
  std::vector<Coord> ones;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i + j == n - 1 || i + j == n) ones.push_back({i, j});
    }
  }
  return BitTensor(Shape({n, n}), std::move(ones));
}

void check_search_args(int n, const Pattern& p, int t, std::uint64_t cap_cells,
                       std::uint64_t& cells_out) {
  if (n < 1) throw argument_error("search requires n >= 1");
  if (t != p.t()) {
    throw argument_error("t=" + std::to_string(t) + " does not match the pattern's t=" +
                         std::to_string(p.t()));
  }
  Shape shape(std::vector<int>(t, n));
  cells_out = shape.cells();
  if (cells_out > cap_cells) {
    throw resource_error("exact search over " + std::to_string(cells_out) +
                         " cells exceeds the cap of " + std::to_string(cap_cells) +
                         " (raise with --cap-cells or TENSOR_EXTREMAL_CAP_CELLS)");
  }
}

bool pattern_fits(const Pattern& p, int n) {
  for (int d : p.shape().dims) {
    if (d > n) return false;
  }
  return true;
}

// Branch-and-bound core shared by the serial and parallel drivers. The
// incumbent value is read through `peek` and improved through `improve`,
// which lets the parallel driver expose a shared atomic; `strict_prune`
// keeps equal-value subtrees alive so parallel witnesses stay deterministic.
struct BranchAndBound {
  const Shape& shape;
  const std::vector<Coord>& cells;
  const Pattern& p;
  std::uint64_t budget;
  bool strict_prune;
  std::function<long long()> peek;
  std::function<void(long long)> improve;

  std::vector<Coord> current;
  long long local_best = -1;
  std::optional<BitTensor> local_witness;
  std::uint64_t nodes = 0;
  bool truncated = false;

  void record(long long ones) {
    if (ones > local_best) {
      local_best = ones;
      local_witness = BitTensor(shape, current);
      improve(ones);
    }
  }

  void dfs(std::uint64_t idx, long long ones) {
    if (truncated) return;
    if (++nodes > budget) {
      truncated = true;
      return;
    }
    record(ones);
    if (idx == cells.size()) return;
    const long long remaining = static_cast<long long>(cells.size() - idx);
    const long long bar = std::max(peek(), local_best);
    if (strict_prune ? (ones + remaining < bar) : (ones + remaining <= bar)) return;
    current.push_back(cells[idx]);
    BitTensor partial(shape, current);
    if (avoids(partial, p)) dfs(idx + 1, ones + 1);
    current.pop_back();
    if (truncated) return;
    dfs(idx + 1, ones);
  }
};

}  // namespace

SearchReport f_exact_serial(int n, const Pattern& p, int t, std::uint64_t node_budget,
                            std::uint64_t cap_cells) {
  std::uint64_t cells_count = 0;
  check_search_args(n, p, t, cap_cells, cells_count);
  Shape shape(std::vector<int>(t, n));
  SearchReport report;
  if (!pattern_fits(p, n)) {
    // P cannot embed at all; the full tensor avoids it.
    report.value = static_cast<long long>(cells_count);
    report.witness = BitTensor::full(shape);
    return report;
  }
  if (p.tensor().ones_count() == 0) {
    // Every tensor dominates the empty pattern: nothing avoids it.
    return report;
  }

  long long incumbent = 0;
  std::optional<BitTensor> seed = BitTensor::zeros(shape);
  if (t == 2) {
    BitTensor band = staircase_band(n);
    if (avoids(band, p)) {
      incumbent = static_cast<long long>(band.ones_count());
      seed = band;
    }
  }

  const std::vector<Coord> cells = cells_in_order(shape);
  BranchAndBound search{
      shape, cells, p, node_budget, /*strict_prune=*/false,
      [&]() { return incumbent; }, [&](long long v) { incumbent = std::max(incumbent, v); }, {},
      -1, std::nullopt, 0, false};
  search.local_best = incumbent;
  search.local_witness = seed;
  search.dfs(0, 0);

  report.value = search.local_best;
  report.witness = search.local_witness;
  report.nodes = search.nodes;
  report.exact = !search.truncated;
  return report;
}

SearchReport f_exact(int n, const Pattern& p, int t, std::uint64_t node_budget, int threads,
                     std::uint64_t cap_cells) {
  const int nthreads = resolve_threads(threads);
  if (nthreads <= 1) return f_exact_serial(n, p, t, node_budget, cap_cells);

  std::uint64_t cells_count = 0;
  check_search_args(n, p, t, cap_cells, cells_count);
  Shape shape(std::vector<int>(t, n));
  SearchReport report;
  if (!pattern_fits(p, n)) {
    report.value = static_cast<long long>(cells_count);
    report.witness = BitTensor::full(shape);
    return report;
  }
  if (p.tensor().ones_count() == 0) return report;

  long long seed_value = 0;
  BitTensor seed = BitTensor::zeros(shape);
  if (t == 2) {
    BitTensor band = staircase_band(n);
    if (avoids(band, p)) {
      seed_value = static_cast<long long>(band.ones_count());
      seed = band;
    }
  }

  const std::vector<Coord> cells = cells_in_order(shape);
  int depth = 0;
  while (depth < static_cast<int>(cells_count) && (1 << depth) < 8 * nthreads && depth < 12) {
    ++depth;
  }
  const std::uint64_t prefixes = std::uint64_t{1} << depth;

  std::atomic<long long> incumbent{seed_value};
  std::atomic<std::uint64_t> nodes_total{0};
  std::atomic<bool> truncated{false};
  std::vector<std::optional<BitTensor>> best_tensor(prefixes);
  std::vector<long long> best_value(prefixes, -1);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
#endif
  for (std::uint64_t code = 0; code < prefixes; ++code) {
    if (truncated.load(std::memory_order_relaxed)) continue;
    std::vector<Coord> prefix_ones;
    for (int j = 0; j < depth; ++j) {
      if ((code >> (depth - 1 - j)) & 1) prefix_ones.push_back(cells[j]);
    }
    const long long prefix_count = static_cast<long long>(prefix_ones.size());
    const long long rest = static_cast<long long>(cells_count) - depth;
    if (prefix_count + rest < incumbent.load(std::memory_order_relaxed)) continue;
    BitTensor prefix_tensor(shape, prefix_ones);
    if (prefix_count > 0 && !avoids(prefix_tensor, p)) continue;

    BranchAndBound search{
        shape, cells, p, node_budget, /*strict_prune=*/true,
        [&]() { return incumbent.load(std::memory_order_relaxed); },
        [&](long long v) {
          long long cur = incumbent.load(std::memory_order_relaxed);
          while (v > cur && !incumbent.compare_exchange_weak(cur, v)) {
          }
        },
        {}, -1, std::nullopt, 0, false};
    search.current = prefix_ones;
    search.dfs(depth, prefix_count);
    nodes_total += search.nodes;
    if (search.truncated) truncated = true;
    best_value[code] = search.local_best;
    best_tensor[code] = std::move(search.local_witness);
  }

  long long best = seed_value;
  std::optional<BitTensor> witness = seed;
  for (std::uint64_t code = 0; code < prefixes; ++code) {
    if (!best_tensor[code]) continue;
    if (best_value[code] > best ||
        (best_value[code] == best && witness && *best_tensor[code] < *witness)) {
      best = best_value[code];
      witness = best_tensor[code];
    }
  }
  report.value = best;
  report.witness = witness;
  report.nodes = nodes_total.load();
  report.exact = !truncated.load();
  return report;
}

std::uint64_t count_avoiders_serial(int n, const Pattern& p, int t, std::uint64_t cap_cells) {
  std::uint64_t cells_count = 0;
  check_search_args(n, p, t, cap_cells, cells_count);
  Shape shape(std::vector<int>(t, n));
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << cells_count;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (avoids(BitTensor::from_code(shape, code), p)) ++count;
  }
  return count;
}

std::uint64_t count_avoiders(int n, const Pattern& p, int t, int threads,
                             std::uint64_t cap_cells) {
  const int nthreads = resolve_threads(threads);
  if (nthreads <= 1) return count_avoiders_serial(n, p, t, cap_cells);
  std::uint64_t cells_count = 0;
  check_search_args(n, p, t, cap_cells, cells_count);
  Shape shape(std::vector<int>(t, n));
  const std::uint64_t total = std::uint64_t{1} << cells_count;
  std::uint64_t count = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nthreads) reduction(+ : count)
#endif
  for (std::uint64_t code = 0; code < total; ++code) {
    if (avoids(BitTensor::from_code(shape, code), p)) ++count;
  }
  return count;
}

BitTensor klazar_contract(const BitTensor& m) {
  return contract(m, uniform_blocks(m.shape(), 2));
}

KlazarCheck klazar_check(int n, const Pattern& p, int t, int threads, std::uint64_t cap_cells) {
  KlazarCheck check;
  check.lhs = BigInt(static_cast<unsigned long>(count_avoiders(2 * n, p, t, threads, cap_cells)));
  check.avoiders_n = count_avoiders(n, p, t, threads, cap_cells);
  SearchReport f = f_exact(n, p, t, kDefaultSearchBudget, threads, cap_cells);
  if (!f.exact) throw resource_error("klazar check needs an exact f value");
  check.f_value = f.value;
  if (check.avoiders_n == 0) {
    check.rhs = 0;
  } else {
    BigInt base = big_pow(BigInt(2), std::uint64_t{1} << t) - 1;
    check.rhs = BigInt(static_cast<unsigned long>(check.avoiders_n)) *
                big_pow(base, static_cast<unsigned long>(check.f_value));
  }
  check.holds = check.lhs <= check.rhs;
  return check;
}

SunflowerReduction sunflower_reduction_check(int n, const Pattern& p,
                                             std::optional<SunflowerSpec> core_override,
                                             std::uint64_t node_budget, int threads,
                                             std::uint64_t cap_cells) {
  if (p.tensor().ones_count() == 0) {
    throw argument_error("sunflower reduction needs a pattern with at least one 1-entry");
  }
  SunflowerSpec spec;
  if (core_override) {
    spec = *core_override;
    // Any override must itself satisfy the sunflower condition for P.
    const auto& ones = p.tensor().ones();
    std::vector<bool> in_core(p.t(), false);
    for (std::size_t i = 0; i < spec.axes.size(); ++i) {
      const int s = spec.axes[i];
      if (s < 0 || s >= p.t()) throw argument_error("core axis out of range");
      in_core[s] = true;
      for (const Coord& c : ones) {
        if (c[s] != spec.values[i]) {
          throw argument_error("supplied core does not fix axis " + std::to_string(s));
        }
      }
    }
    for (std::size_t i = 0; i < ones.size(); ++i) {
      for (std::size_t j = i + 1; j < ones.size(); ++j) {
        for (int r = 0; r < p.t(); ++r) {
          if (!in_core[r] && ones[i][r] == ones[j][r]) {
            throw argument_error("supplied core misses agreeing axis " + std::to_string(r));
          }
        }
      }
    }
  } else {
    if (!p.sunflower() || p.sunflower()->axes.empty()) {
      throw argument_error(
          "pattern has an empty sunflower core; the free-pattern route (full divisions) applies "
          "instead");
    }
    spec = *p.sunflower();
  }
  if (spec.axes.empty()) {
    throw argument_error("sunflower reduction requires a non-empty core");
  }

  SunflowerReduction out;
  out.core_axis = spec.axes.front();
  const int c_s = spec.values.front();
  out.reduced_pattern = slice(p.tensor(), out.core_axis, c_s);
  Pattern reduced(out.reduced_pattern);

  SearchReport lhs = f_exact(n, p, p.t(), node_budget, threads, cap_cells);
  SearchReport rhs = f_exact(n, reduced, p.t() - 1, node_budget, threads, cap_cells);
  if (!lhs.exact || !rhs.exact) throw resource_error("sunflower reduction needs exact f values");
  out.lhs = lhs.value;
  out.rhs = static_cast<long long>(n) * rhs.value;
  out.holds = out.lhs <= out.rhs;
  return out;
}

namespace {

int latin_reach(int t) {
  if (t == 2) return 6;
  if (t == 3) return 4;
  return 2;
}

// Backtracking over the symbol array L : [n]^(t-1) -> [n]; a tensor is Latin
// iff L is injective along every axis line of its domain.
struct LatinEnumerator {
  int n, t;
  int domain_axes;
  std::uint64_t domain_cells;
  std::vector<Coord> domain;
  // line_of[a][cell]: index of the axis-a line through the cell.
  std::vector<std::vector<int>> line_of;
  std::vector<unsigned> used;  // flattened [a][line]
  std::vector<int> symbol;
  unsigned full_mask;
  int lines_per_axis;

  LatinEnumerator(int n_, int t_) : n(n_), t(t_) {
    domain_axes = t - 1;
    Shape domain_shape(std::vector<int>(domain_axes, n));
    domain_cells = domain_shape.cells();
    domain = cells_in_order(domain_shape);
    lines_per_axis = 1;
    for (int i = 0; i < domain_axes - 1; ++i) lines_per_axis *= n;
    line_of.assign(domain_axes, std::vector<int>(domain_cells));
    for (std::uint64_t cell = 0; cell < domain_cells; ++cell) {
      for (int a = 0; a < domain_axes; ++a) {
        int id = 0;
        for (int r = 0; r < domain_axes; ++r) {
          if (r != a) id = id * n + domain[cell][r];
        }
        line_of[a][cell] = id;
      }
    }
    used.assign(static_cast<std::size_t>(domain_axes) * lines_per_axis, 0);
    symbol.assign(domain_cells, -1);
    full_mask = (n == 32) ? ~0u : ((1u << n) - 1);
  }

  unsigned& used_mask(int axis, int cell) {
    return used[static_cast<std::size_t>(axis) * lines_per_axis + line_of[axis][cell]];
  }

  bool place(int cell, int sym) {
    const unsigned bit = 1u << sym;
    for (int a = 0; a < domain_axes; ++a) {
      if (used_mask(a, cell) & bit) return false;
    }
    for (int a = 0; a < domain_axes; ++a) used_mask(a, cell) |= bit;
    symbol[cell] = sym;
    return true;
  }

  void unplace(int cell) {
    const unsigned bit = 1u << symbol[cell];
    for (int a = 0; a < domain_axes; ++a) used_mask(a, cell) &= ~bit;
    symbol[cell] = -1;
  }

  BitTensor emit() const {
    std::vector<Coord> ones;
    ones.reserve(domain_cells);
    for (std::uint64_t cell = 0; cell < domain_cells; ++cell) {
      Coord c = domain[cell];
      c.push_back(symbol[cell]);
      ones.push_back(std::move(c));
    }
    return BitTensor(Shape(std::vector<int>(t, n)), std::move(ones));
  }

  void dfs(std::uint64_t cell, const std::function<void(const BitTensor&)>& fn) {
    if (cell == domain_cells) {
      fn(emit());
      return;
    }
    unsigned avail = full_mask;
    for (int a = 0; a < domain_axes; ++a) avail &= ~used_mask(a, static_cast<int>(cell));
    while (avail) {
      const unsigned bit = avail & (~avail + 1);
      const int sym = __builtin_ctz(bit);
      avail ^= bit;
      place(static_cast<int>(cell), sym);
      dfs(cell + 1, fn);
      unplace(static_cast<int>(cell));
    }
  }
};

void check_latin_args(int n, int t, bool override_reach) {
  if (n < 1) throw argument_error("latin enumeration requires n >= 1");
  if (t < 2) throw argument_error("latin enumeration requires t >= 2");
  if (t > 8) throw resource_error("latin enumeration limited to t <= 8");
  if (n > 16) throw resource_error("latin enumeration limited to n <= 16");
  if (!override_reach && n > latin_reach(t)) {
    throw resource_error("latin enumeration at t=" + std::to_string(t) + " is limited to n <= " +
                         std::to_string(latin_reach(t)) + " (lift with --override-reach)");
  }
}

std::vector<int> unrank_permutation(int n, std::uint64_t rank) {
  std::vector<std::uint64_t> fact(n, 1);
  for (int i = 1; i < n; ++i) fact[i] = fact[i - 1] * static_cast<std::uint64_t>(i);
  std::vector<int> avail(n), perm;
  for (int i = 0; i < n; ++i) avail[i] = i;
  perm.reserve(n);
  for (int i = n - 1; i >= 0; --i) {
    const std::uint64_t pick = rank / fact[i];
    rank %= fact[i];
    perm.push_back(avail[pick]);
    avail.erase(avail.begin() + static_cast<long>(pick));
  }
  return perm;
}

std::uint64_t latin_count_filtered(int n, int t, int threads, bool override_reach,
                                   const std::function<bool(const BitTensor&)>& keep) {
  check_latin_args(n, t, override_reach);
  const int nthreads = resolve_threads(threads);
  if (nthreads <= 1 || t == 2 || n == 1) {
    std::uint64_t count = 0;
    LatinEnumerator e(n, t);
    e.dfs(0, [&](const BitTensor& m) {
      if (keep(m)) ++count;
    });
    return count;
  }
  // Parallelize over the first domain line: its symbols form a permutation.
  std::uint64_t nperms = 1;
  for (int i = 2; i <= n; ++i) nperms *= i;
  std::uint64_t count = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads) reduction(+ : count)
#endif
  for (std::uint64_t rank = 0; rank < nperms; ++rank) {
    LatinEnumerator e(n, t);
    std::vector<int> prefix = unrank_permutation(n, rank);
    // A permutation on the first line never conflicts in a fresh enumerator.
    for (int j = 0; j < n; ++j) e.place(j, prefix[j]);
    e.dfs(n, [&](const BitTensor& m) {
      if (keep(m)) ++count;
    });
  }
  return count;
}

}  // namespace

void latin_enumerate(int n, int t, const std::function<void(const BitTensor&)>& fn,
                     bool override_reach) {
  check_latin_args(n, t, override_reach);
  LatinEnumerator e(n, t);
  e.dfs(0, fn);
}

std::vector<BitTensor> latin_matrices(int n, int t, bool override_reach) {
  std::vector<BitTensor> out;
  latin_enumerate(n, t, [&](const BitTensor& m) { out.push_back(m); }, override_reach);
  return out;
}

std::uint64_t latin_count_serial(int n, int t) {
  return latin_count_filtered(n, t, 1, false, [](const BitTensor&) { return true; });
}

std::uint64_t latin_count(int n, int t, int threads, bool override_reach) {
  return latin_count_filtered(n, t, threads, override_reach,
                              [](const BitTensor&) { return true; });
}

std::uint64_t latin_count_avoiders_serial(int n, int t, const Pattern& p) {
  return latin_count_filtered(n, t, 1, false,
                              [&](const BitTensor& m) { return avoids(m, p); });
}

std::uint64_t latin_count_avoiders(int n, int t, const Pattern& p, int threads,
                                   bool override_reach) {
  return latin_count_filtered(n, t, threads, override_reach,
                              [&](const BitTensor& m) { return avoids(m, p); });
}

}  // namespace tenpat
