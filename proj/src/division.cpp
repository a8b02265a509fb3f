#include "tenpat/division.hpp"

#include <algorithm>
#include <atomic>
#include <map>

#include "tenpat/alpha.hpp"
#include "tenpat/errors.hpp"
#include "tenpat/parallel.hpp"

namespace tenpat {

namespace {

bool next_combination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[i] < n - (k - i)) {
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Lexicographic rank of a k-combination from [0, n).
std::uint64_t rank_combination(int n, const std::vector<int>& comb) {
  const int k = static_cast<int>(comb.size());
  std::uint64_t rank = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int c = prev + 1; c < comb[i]; ++c) {
      rank += to_uint64(binomial(static_cast<unsigned long>(n - c - 1),
                                 static_cast<unsigned long>(k - i - 1)));
    }
    prev = comb[i];
  }
  return rank;
}

// Lexicographic unranking of a k-combination from [0, n).
std::vector<int> unrank_combination(int n, int k, std::uint64_t rank) {
  std::vector<int> comb;
  comb.reserve(k);
  int c = 0;
  for (int i = 0; i < k; ++i) {
    while (true) {
      BigInt below = binomial(static_cast<unsigned long>(n - c - 1),
                              static_cast<unsigned long>(k - i - 1));
      if (!fits_uint64(below)) throw resource_error("division space too large to unrank");
      std::uint64_t cnt = to_uint64(below);
      if (rank < cnt) break;
      rank -= cnt;
      ++c;
    }
    comb.push_back(c++);
  }
  return comb;
}

void check_k(const Shape& shape, int k) {
  if (k < 1) throw argument_error("division requires k >= 1");
  for (int r = 0; r < shape.t(); ++r) {
    if (k > shape.dims[r]) {
      throw argument_error("k=" + std::to_string(k) + " exceeds axis " + std::to_string(r) +
                           " length " + std::to_string(shape.dims[r]));
    }
  }
}

// Division as per-axis combinations of interior cut candidates.
struct DivisionOdometer {
  const Shape& shape;
  int k;
  std::vector<std::vector<int>> combos;  // cut position - 1 per axis

  DivisionOdometer(const Shape& s, int kk, std::uint64_t code) : shape(s), k(kk) {
    combos.resize(shape.t());
    std::vector<std::uint64_t> axis_sizes(shape.t());
    for (int r = 0; r < shape.t(); ++r) {
      BigInt c = binomial(static_cast<unsigned long>(shape.dims[r] - 1),
                          static_cast<unsigned long>(k - 1));
      axis_sizes[r] = to_uint64(c);
    }
    for (int r = shape.t() - 1; r >= 0; --r) {
      combos[r] = unrank_combination(shape.dims[r] - 1, k - 1, code % axis_sizes[r]);
      code /= axis_sizes[r];
    }
  }

  Division current() const {
    Division d;
    d.cuts.resize(shape.t());
    for (int r = 0; r < shape.t(); ++r) {
      for (int c : combos[r]) d.cuts[r].push_back(c + 1);
    }
    return d;
  }

  bool advance() {
    for (int r = shape.t() - 1; r >= 0; --r) {
      if (next_combination(combos[r], shape.dims[r] - 1)) return true;
      for (int i = 0; i < k - 1; ++i) combos[r][i] = i;
    }
    return false;
  }
};

}  // namespace

std::vector<int> Division::parts() const {
  std::vector<int> p(cuts.size());
  for (std::size_t r = 0; r < cuts.size(); ++r) p[r] = static_cast<int>(cuts[r].size()) + 1;
  return p;
}

int Division::interval_of(int axis, int index) const {
  const auto& c = cuts[axis];
  return static_cast<int>(std::upper_bound(c.begin(), c.end(), index) - c.begin());
}

void Division::validate_for(const Shape& shape) const {
  if (static_cast<int>(cuts.size()) != shape.t()) {
    throw argument_error("division has " + std::to_string(cuts.size()) + " axes, shape has " +
                         std::to_string(shape.t()));
  }
  for (int r = 0; r < shape.t(); ++r) {
    int prev = 0;
    for (int c : cuts[r]) {
      if (c <= prev || c >= shape.dims[r]) {
        throw argument_error("cut " + std::to_string(c) + " on axis " + std::to_string(r) +
                             " does not split [0," + std::to_string(shape.dims[r]) +
                             ") into non-empty intervals");
      }
      prev = c;
    }
  }
}

BigInt count_divisions(int p, int k, int t) {
  if (p < 1 || k < 1 || k > p || t < 1) {
    throw argument_error("count_divisions requires 1 <= k <= p and t >= 1");
  }
  return big_pow(binomial(static_cast<unsigned long>(p - 1), static_cast<unsigned long>(k - 1)),
                 static_cast<unsigned long>(t));
}

std::uint64_t division_space_size(const Shape& shape, int k, std::uint64_t cap) {
  check_k(shape, k);
  BigInt total = 1;
  for (int r = 0; r < shape.t(); ++r) {
    total *= binomial(static_cast<unsigned long>(shape.dims[r] - 1),
                      static_cast<unsigned long>(k - 1));
  }
  if (!fits_uint64(total) || to_uint64(total) > cap) {
    throw resource_error("division enumeration of " + to_string(total) +
                         " candidates exceeds the cap of " + std::to_string(cap));
  }
  return to_uint64(total);
}

Division division_from_code(const Shape& shape, int k, std::uint64_t code) {
  check_k(shape, k);
  return DivisionOdometer(shape, k, code).current();
}

std::uint64_t division_code(const Shape& shape, int k, const Division& d) {
  check_k(shape, k);
  d.validate_for(shape);
  std::uint64_t code = 0;
  for (int r = 0; r < shape.t(); ++r) {
    std::vector<int> comb;
    comb.reserve(d.cuts[r].size());
    for (int c : d.cuts[r]) comb.push_back(c - 1);
    const std::uint64_t axis_size = to_uint64(binomial(
        static_cast<unsigned long>(shape.dims[r] - 1), static_cast<unsigned long>(k - 1)));
    code = code * axis_size + rank_combination(shape.dims[r] - 1, comb);
  }
  return code;
}

void for_each_division(const Shape& shape, int k, const std::function<void(const Division&)>& fn,
                       std::uint64_t cap) {
  const std::uint64_t total = division_space_size(shape, k, cap);
  if (total == 0) return;
  DivisionOdometer odo(shape, k, 0);
  do {
    fn(odo.current());
  } while (odo.advance());
}

BitTensor contract(const BitTensor& m, const Division& d) {
  d.validate_for(m.shape());
  const int t = m.t();
  std::vector<Coord> cells;
  cells.reserve(m.ones().size());
  Coord cell(t);
  for (const Coord& c : m.ones()) {
    for (int r = 0; r < t; ++r) cell[r] = d.interval_of(r, c[r]);
    cells.push_back(cell);
  }
  return BitTensor(Shape(d.parts()), std::move(cells));
}

bool is_full(const BitTensor& m, const Division& d) {
  d.validate_for(m.shape());
  const int t = m.t();
  std::uint64_t cell_count = 1;
  for (int p : d.parts()) cell_count *= static_cast<std::uint64_t>(p);
  if (m.ones_count() < cell_count) return false;
  std::vector<bool> seen(cell_count, false);
  std::uint64_t distinct = 0;
  const auto parts = d.parts();
  for (const Coord& c : m.ones()) {
    std::uint64_t idx = 0;
    for (int r = 0; r < t; ++r) idx = idx * parts[r] + d.interval_of(r, c[r]);
    if (!seen[idx]) {
      seen[idx] = true;
      if (++distinct == cell_count) return true;
    }
  }
  return false;
}

std::optional<Division> find_full_division_serial(const BitTensor& m, int k, std::uint64_t cap) {
  const std::uint64_t total = division_space_size(m.shape(), k, cap);
  if (total == 0) return std::nullopt;
  DivisionOdometer odo(m.shape(), k, 0);
  do {
    Division d = odo.current();
    if (is_full(m, d)) return d;
  } while (odo.advance());
  return std::nullopt;
}

std::optional<Division> find_full_division(const BitTensor& m, int k, int threads,
                                           std::uint64_t cap) {
  const int nthreads = resolve_threads(threads);
  if (nthreads <= 1) return find_full_division_serial(m, k, cap);
  const std::uint64_t total = division_space_size(m.shape(), k, cap);
  if (total == 0) return std::nullopt;
  const std::uint64_t nchunks = std::min<std::uint64_t>(total, 8ull * nthreads);
  const std::uint64_t chunk = (total + nchunks - 1) / nchunks;
  std::atomic<std::uint64_t> best{UINT64_MAX};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
#endif
  for (std::uint64_t ci = 0; ci < nchunks; ++ci) {
    const std::uint64_t lo = ci * chunk;
    const std::uint64_t hi = std::min(total, lo + chunk);
    if (lo >= hi || lo >= best.load(std::memory_order_relaxed)) continue;
    DivisionOdometer odo(m.shape(), k, lo);
    for (std::uint64_t code = lo; code < hi; ++code, odo.advance()) {
      if (code >= best.load(std::memory_order_relaxed)) break;
      if (is_full(m, odo.current())) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (code < cur && !best.compare_exchange_weak(cur, code)) {
        }
        break;
      }
    }
  }
  const std::uint64_t found = best.load();
  if (found == UINT64_MAX) return std::nullopt;
  return division_from_code(m.shape(), k, found);
}

bool is_heavy(const BitTensor& m, int k) {
  if (m.t() < 2) throw argument_error("is_heavy requires t >= 2");
  if (!m.shape().cubic()) throw argument_error("is_heavy requires a cubic tensor");
  const int s = m.t();
  const int n = m.shape().side();
  BigRat threshold = alpha(s, k) * BigRat(big_pow(BigInt(n), static_cast<unsigned long>(s - 1)));
  return BigRat(static_cast<unsigned long>(m.ones_count())) > threshold;
}

Division uniform_blocks(const Shape& shape, int block) {
  if (block < 1) throw argument_error("block length must be positive");
  Division d;
  d.cuts.resize(shape.t());
  for (int r = 0; r < shape.t(); ++r) {
    if (shape.dims[r] % block != 0) {
      throw argument_error("axis " + std::to_string(r) + " length " +
                           std::to_string(shape.dims[r]) + " is not divisible by " +
                           std::to_string(block));
    }
    for (int c = block; c < shape.dims[r]; c += block) d.cuts[r].push_back(c);
  }
  return d;
}

Division compose_divisions(const Shape& shape, const Division& inner, const Division& outer) {
  inner.validate_for(shape);
  outer.validate_for(Shape(inner.parts()));
  Division composed;
  composed.cuts.resize(shape.t());
  for (int r = 0; r < shape.t(); ++r) {
    for (int j : outer.cuts[r]) composed.cuts[r].push_back(inner.cuts[r][j - 1]);
  }
  return composed;
}

BitTensor stack_blocks(const std::vector<BitTensor>& blocks, int axis) {
  if (blocks.empty()) throw argument_error("stack_blocks requires at least one block");
  const Shape& base = blocks[0].shape();
  if (axis < 0 || axis >= base.t()) throw argument_error("stack axis out of range");
  for (const BitTensor& b : blocks) {
    if (!(b.shape() == base)) throw argument_error("stacked blocks must share one shape");
  }
  std::vector<int> dims = base.dims;
  dims[axis] *= static_cast<int>(blocks.size());
  std::vector<Coord> ones;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const int shift = static_cast<int>(i) * base.dims[axis];
    for (Coord c : blocks[i].ones()) {
      c[axis] += shift;
      ones.push_back(std::move(c));
    }
  }
  return BitTensor(Shape(std::move(dims)), std::move(ones));
}

std::optional<PigeonholeExtraction> extract_full_division_pigeonhole(
    const std::vector<BitTensor>& blocks, int axis, int k) {
  if (blocks.empty()) return std::nullopt;
  const Shape& base = blocks[0].shape();
  if (base.t() < 2) throw argument_error("pigeonhole extraction requires t >= 2 blocks");
  if (!base.cubic()) throw argument_error("pigeonhole extraction requires cubic blocks");
  if (axis < 0 || axis >= base.t()) throw argument_error("axis out of range");
  for (const BitTensor& b : blocks) {
    if (!(b.shape() == base)) throw argument_error("blocks must share one shape");
  }
  const int p = base.side();
  if (k < 1 || k > p) return std::nullopt;

  const Shape smash_shape = base.without_axis(axis);
  // Map from smash-division code to the blocks where that division is full.
  std::map<std::uint64_t, std::vector<int>> share;
  if (p <= 6) {
    // Exhaustive full-division sets per smash.
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      BitTensor s = smash(blocks[i], axis);
      std::uint64_t code = 0;
      for_each_division(smash_shape, k, [&](const Division& d) {
        if (is_full(s, d)) share[code].push_back(static_cast<int>(i));
        ++code;
      });
    }
  } else {
    // Least-witness shortcut; sharing detection is heuristic here.
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      BitTensor s = smash(blocks[i], axis);
      auto witness = find_full_division_serial(s, k);
      if (!witness) continue;
      share[division_code(smash_shape, k, *witness)].push_back(static_cast<int>(i));
    }
  }

  for (const auto& [code, holders] : share) {
    if (static_cast<int>(holders.size()) < k) continue;
    Division shared = division_from_code(smash_shape, k, code);
    std::vector<int> chosen(holders.begin(), holders.begin() + k);
    // Lift: the chosen blocks supply the k intervals of `axis`, the shared
    // division the remaining axes.
    Division lifted;
    lifted.cuts.resize(base.t());
    for (int r = 0, sr = 0; r < base.t(); ++r) {
      if (r == axis) {
        for (int i = 1; i < k; ++i) lifted.cuts[r].push_back(chosen[i] * p);
      } else {
        lifted.cuts[r] = shared.cuts[sr++];
      }
    }
    return PigeonholeExtraction{std::move(lifted), std::move(chosen)};
  }
  return std::nullopt;
}

}  // namespace tenpat
