#include "tenpat/containment.hpp"

#include <algorithm>

#include "tenpat/errors.hpp"

namespace tenpat {

namespace {

// Shared search state. asg[r][i] is the matrix index assigned to pattern
// index i on axis r, or -1.
struct EmbedSearch {
  const BitTensor& m;
  const std::vector<Coord>& pat;
  std::vector<std::vector<int>> asg;
  std::uint64_t nodes = 0;
  std::uint64_t budget;

  EmbedSearch(const BitTensor& matrix, const Pattern& pattern, std::uint64_t node_budget)
      : m(matrix), pat(pattern.tensor().ones()), budget(node_budget) {
    asg.resize(m.t());
    for (int r = 0; r < m.t(); ++r) asg[r].assign(pattern.shape().dims[r], -1);
  }

  // Admissible matrix-index window for pattern index `a` on axis r, derived
  // from the nearest assigned neighbours plus remaining-capacity on both
  // sides. Returns false if the window is empty.
  bool window(int r, int a, int& lo, int& hi) const {
    const auto& ax = asg[r];
    const int k = static_cast<int>(ax.size());
    lo = a;  // needs `a` smaller indices below
    for (int b = a - 1; b >= 0; --b) {
      if (ax[b] >= 0) {
        lo = std::max(lo, ax[b] + (a - b));
        break;
      }
    }
    hi = m.shape().dims[r] - (k - a);  // needs k-1-a larger indices above
    for (int b = a + 1; b < k; ++b) {
      if (ax[b] >= 0) {
        hi = std::min(hi, ax[b] - (b - a));
        break;
      }
    }
    return lo <= hi;
  }

  bool dfs(std::size_t entry) {
    if (entry == pat.size()) return true;
    const Coord& a = pat[entry];
    const int t = m.t();
    // Per-axis constraint: fixed value or admissible window.
    std::vector<int> lo(t), hi(t);
    for (int r = 0; r < t; ++r) {
      const int v = asg[r][a[r]];
      if (v >= 0) {
        lo[r] = hi[r] = v;
      } else if (!window(r, a[r], lo[r], hi[r])) {
        return false;
      }
    }
    // Matrix ones are sorted, so candidates come out smallest-first.
    for (const Coord& x : m.ones()) {
      bool ok = true;
      for (int r = 0; r < t && ok; ++r) ok = x[r] >= lo[r] && x[r] <= hi[r];
      if (!ok) continue;
      if (++nodes > budget) {
        throw resource_error("containment search exceeded the node budget of " +
                             std::to_string(budget) + " (raise with --budget)");
      }
      std::vector<int> touched;
      for (int r = 0; r < t; ++r) {
        if (asg[r][a[r]] < 0) {
          asg[r][a[r]] = x[r];
          touched.push_back(r);
        }
      }
      if (dfs(entry + 1)) return true;
      for (int r : touched) asg[r][a[r]] = -1;
    }
    return false;
  }

};

// Once containment is established, the witness is re-derived as the
// lexicographically least selections tuple: slots are assigned in tuple
// order (axis-major, ascending values), pruned by per-entry prefix lookups
// into the sorted ones list and by exact membership once an entry's last
// axis is placed. The first complete assignment is the least witness.
struct LexMinSearch {
  const BitTensor& m;
  const std::vector<Coord>& pat;
  std::vector<std::vector<int>> sel;
  // entries whose pattern index on axis r equals i: checked when slot (r,i)
  // is assigned.
  std::vector<std::vector<std::vector<int>>> touching;
  std::uint64_t nodes = 0;
  std::uint64_t budget;

  LexMinSearch(const BitTensor& matrix, const Pattern& pattern, std::uint64_t node_budget)
      : m(matrix), pat(pattern.tensor().ones()), budget(node_budget) {
    const int t = m.t();
    sel.resize(t);
    touching.resize(t);
    for (int r = 0; r < t; ++r) {
      sel[r].assign(pattern.shape().dims[r], -1);
      touching[r].resize(pattern.shape().dims[r]);
    }
    for (std::size_t e = 0; e < pat.size(); ++e) {
      for (int r = 0; r < t; ++r) touching[r][pat[e][r]].push_back(static_cast<int>(e));
    }
  }

  // Does M hold a one matching entry e on axes 0..r under the current
  // assignment? The ones are sorted, so the assigned prefix maps to a
  // contiguous range.
  bool prefix_alive(int e, int r) const {
    Coord lo(m.t(), 0);
    for (int s = 0; s <= r; ++s) lo[s] = sel[s][pat[e][s]];
    const auto it = std::lower_bound(m.ones().begin(), m.ones().end(), lo);
    if (it == m.ones().end()) return false;
    for (int s = 0; s <= r; ++s) {
      if ((*it)[s] != lo[s]) return false;
    }
    return true;
  }

  bool entry_ok(int e, int r) {
    if (r == m.t() - 1) {
      Coord cell(m.t());
      for (int s = 0; s < m.t(); ++s) cell[s] = sel[s][pat[e][s]];
      return m.has(cell);
    }
    return prefix_alive(e, r);
  }

  bool assign(int r, int i) {
    const int t = m.t();
    if (i == static_cast<int>(sel[r].size())) {
      return r + 1 == t ? true : assign(r + 1, 0);
    }
    const int n = m.shape().dims[r];
    const int k = static_cast<int>(sel[r].size());
    const int lo = i == 0 ? 0 : sel[r][i - 1] + 1;
    const int hi = n - (k - i);
    for (int v = lo; v <= hi; ++v) {
      if (++nodes > budget) {
        throw resource_error("witness minimization exceeded the node budget of " +
                             std::to_string(budget) + " (raise with --budget)");
      }
      sel[r][i] = v;
      bool ok = true;
      for (int e : touching[r][i]) {
        if (!entry_ok(e, r)) {
          ok = false;
          break;
        }
      }
      if (ok && assign(r, i + 1)) return true;
    }
    sel[r][i] = -1;
    return false;
  }
};

}  // namespace

namespace {

// Decision only; the witness pass is skipped on the avoid() hot path.
bool embeds(const BitTensor& m, const Pattern& p, std::uint64_t node_budget,
            std::uint64_t& nodes) {
  if (m.t() != p.t()) {
    throw argument_error("dimension mismatch: matrix has t=" + std::to_string(m.t()) +
                         ", pattern has t=" + std::to_string(p.t()));
  }
  for (int r = 0; r < m.t(); ++r) {
    if (p.shape().dims[r] > m.shape().dims[r]) return false;  // no admissible submatrix
  }
  EmbedSearch search(m, p, node_budget);
  const bool found = search.dfs(0);
  nodes = search.nodes;
  return found;
}

}  // namespace

ContainmentResult find_embedding(const BitTensor& m, const Pattern& p,
                                 std::uint64_t node_budget) {
  ContainmentResult result;
  if (embeds(m, p, node_budget, result.nodes)) {
    // Containment is settled; derive the least witness separately.
    LexMinSearch lexmin(m, p, node_budget - std::min(node_budget, result.nodes));
    if (!lexmin.assign(0, 0)) {
      throw invariant_error("witness minimization lost a known embedding");
    }
    result.embedding = Embedding{lexmin.sel};
    result.nodes += lexmin.nodes;
  }
  return result;
}

bool avoids(const BitTensor& m, const Pattern& p, std::uint64_t node_budget) {
  std::uint64_t nodes = 0;
  return !embeds(m, p, node_budget, nodes);
}

bool dominates(const BitTensor& big, const BitTensor& small) {
  if (big.shape() != small.shape()) return false;
  for (const Coord& c : small.ones()) {
    if (!big.has(c)) return false;
  }
  return true;
}

}  // namespace tenpat
