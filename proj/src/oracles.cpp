#include "tenpat/oracles.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "tenpat/errors.hpp"

namespace tenpat::oracles {

namespace {

// Advance an increasing k-combination drawn from [0, n); returns false after
// the last one.
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

}  // namespace

std::optional<std::vector<std::vector<int>>> first_embedding_by_enumeration(
    const BitTensor& m, const BitTensor& p) {
  if (m.t() != p.t()) {
    throw argument_error("dimension mismatch between matrix and pattern");
  }
  const int t = m.t();
  for (int r = 0; r < t; ++r) {
    if (p.shape().dims[r] > m.shape().dims[r]) return std::nullopt;
  }
  std::vector<std::vector<int>> sel(t);
  for (int r = 0; r < t; ++r) {
    sel[r].resize(p.shape().dims[r]);
    for (int i = 0; i < p.shape().dims[r]; ++i) sel[r][i] = i;
  }
  Coord mapped(t);
  while (true) {
    bool dominated = true;
    for (const Coord& a : p.ones()) {
      for (int r = 0; r < t; ++r) mapped[r] = sel[r][a[r]];
      if (!m.has(mapped)) {
        dominated = false;
        break;
      }
    }
    if (dominated) return sel;
    int axis = t - 1;
    while (axis >= 0 && !next_combination(sel[axis], m.shape().dims[axis])) {
      for (int i = 0; i < p.shape().dims[axis]; ++i) sel[axis][i] = i;
      --axis;
    }
    if (axis < 0) return std::nullopt;
  }
}

bool contains_by_enumeration(const BitTensor& m, const BitTensor& p) {
  return first_embedding_by_enumeration(m, p).has_value();
}

long long max_ones_avoiding_by_enumeration(int n, const BitTensor& p, int t) {
  Shape shape(std::vector<int>(t, n));
  const std::uint64_t cells = shape.cells();
  if (cells > 25) throw resource_error("oracle enumeration limited to 25 cells");
  long long best = -1;
  const std::uint64_t total = std::uint64_t{1} << cells;
  for (std::uint64_t code = 0; code < total; ++code) {
    BitTensor m = BitTensor::from_code(shape, code);
    if (static_cast<long long>(m.ones_count()) <= best) continue;
    if (!contains_by_enumeration(m, p)) best = static_cast<long long>(m.ones_count());
  }
  return best;
}

std::uint64_t count_latin_squares(int n) {
  if (n < 1) throw argument_error("count_latin_squares requires n >= 1");
  if (n > 5) throw resource_error("count_latin_squares limited to n <= 5");
  std::vector<unsigned> col_used(n, 0);
  std::uint64_t count = 0;
  const unsigned full = (1u << n) - 1;
  // Cell-by-cell fill in row-major order; row masks rebuilt per row.
  std::vector<unsigned> row_used(n, 0);
  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == n * n) {
      ++count;
      return;
    }
    const int r = cell / n, c = cell % n;
    unsigned avail = full & ~(row_used[r] | col_used[c]);
    while (avail) {
      const unsigned bit = avail & (~avail + 1);
      avail ^= bit;
      row_used[r] |= bit;
      col_used[c] |= bit;
      self(self, cell + 1);
      row_used[r] ^= bit;
      col_used[c] ^= bit;
    }
  };
  rec(rec, 0);
  return count;
}

BigInt count_turan_cliques(int n, int t, unsigned long k) {
  if (n < 0 || t < 1) throw argument_error("count_turan_cliques requires n >= 0, t >= 1");
  if (k == 0) return BigInt(1);
  // Balanced parts: n mod t of size ceil(n/t), the rest floor(n/t).
  std::vector<int> part_of(n);
  {
    int v = 0;
    for (int p = 0; p < t && v < n; ++p) {
      int size = n / t + (p < n % t ? 1 : 0);
      for (int i = 0; i < size; ++i) part_of[v++] = p;
    }
  }
  BigInt total = 0;
  std::vector<int> clique;
  auto extend = [&](auto&& self, int from) -> void {
    if (clique.size() == k) {
      total += 1;
      return;
    }
    for (int v = from; v < n; ++v) {
      bool ok = true;
      for (int u : clique) {
        if (part_of[u] == part_of[v]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        clique.push_back(v);
        self(self, v + 1);
        clique.pop_back();
      }
    }
  };
  extend(extend, 0);
  return total;
}

namespace {

// Memoized Turán binomial via explicit clique counting, for the cascade
// oracle below.
long long turan_value(int n, int t, int k) {
  thread_local std::map<std::tuple<int, int, int>, long long> memo;
  auto key = std::make_tuple(n, t, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  BigInt v = count_turan_cliques(n, t, static_cast<unsigned long>(k));
  if (!v.fits_slong_p()) throw resource_error("cascade oracle value overflow");
  long long out = v.get_si();
  memo.emplace(key, out);
  return out;
}

}  // namespace

std::vector<std::vector<std::pair<int, long long>>> all_cascade_representations(
    std::uint64_t m, int k, int t) {
  std::vector<std::vector<std::pair<int, long long>>> found;
  std::vector<std::pair<int, long long>> terms;
  // Position i holds level k-i with color count t-i. Side condition between
  // consecutive terms: n_i - floor(n_i / (t - i)) > n_{i+1}.
  auto rec = [&](auto&& self, int i, long long rem, long long prev_n) -> void {
    const int level = k - i;
    if (level <= 0) return;  // lemma requires the last level positive
    const int colors = t - i;
    if (level > colors) return;  // no cliques above the color count
    // Upper bound on this term's value from the side condition, or rem.
    long long n_hi;
    if (i == 0) {
      n_hi = -1;  // grow until the binomial exceeds rem
    } else {
      n_hi = prev_n - prev_n / (t - (i - 1)) - 1;
      if (n_hi < 0) return;
    }
    for (long long n = 0; n_hi < 0 || n <= n_hi; ++n) {
      long long v = turan_value(static_cast<int>(n), colors, level);
      if (v > rem) break;
      terms.emplace_back(level, n);
      if (v == rem) {
        // Valid only if the final term satisfies n >= level >= 1.
        if (n >= level) found.push_back(terms);
      } else {
        self(self, i + 1, rem - v, n);
      }
      terms.pop_back();
    }
  };
  rec(rec, 0, static_cast<long long>(m), 0);
  return found;
}

}  // namespace tenpat::oracles
