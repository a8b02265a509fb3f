#include "tenpat/shadow.hpp"

#include <algorithm>
#include <set>

#include "tenpat/errors.hpp"

namespace tenpat {

BigInt CascadeRep::total() const {
  BigInt sum = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    sum += turan_binomial(terms[i].n, terms[i].level, t - static_cast<int>(i));
  }
  return sum;
}

BigInt turan_binomial(const BigInt& n, int k, int t) {
  if (sgn(n) < 0 || k < 0 || t < 1) {
    throw argument_error("turan_binomial requires n >= 0, k >= 0, t >= 1");
  }
  if (k == 0) return BigInt(1);
  if (k > t) return BigInt(0);  // a t-partite graph has no (t+1)-clique
  // Balanced part sizes: (n mod t) parts of ceil(n/t), the rest floor(n/t).
  BigInt q = n / t;
  BigInt rem = n - q * t;
  if (!fits_uint64(rem)) throw argument_error("turan_binomial internal overflow");
  const std::uint64_t big_parts = to_uint64(rem);
  std::vector<BigInt> sizes;
  sizes.reserve(t);
  for (int p = 0; p < t; ++p) sizes.push_back(p < static_cast<int>(big_parts) ? q + 1 : q);
  return elementary_symmetric(sizes, static_cast<unsigned long>(k));
}

BigInt turan_binomial(std::uint64_t n, int k, int t) {
  BigInt bn;
  mpz_import(bn.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return turan_binomial(bn, k, t);
}

namespace {

// Largest n with binom(n, level)_colors <= m; requires m >= 1 and
// level <= colors so the value is unbounded in n.
BigInt greedy_level_value(const BigInt& m, int level, int colors) {
  BigInt lo = level;  // binom(level, level)_colors = 1 <= m
  BigInt hi = lo;
  while (turan_binomial(hi, level, colors) <= m) hi *= 2;
  // Invariant: value(lo) <= m < value(hi).
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (turan_binomial(mid, level, colors) <= m) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

CascadeRep cascade_representation(const BigInt& m, int k, int t) {
  if (sgn(m) <= 0) throw argument_error("cascade_representation requires m >= 1");
  if (k < 1 || t < k) throw argument_error("cascade_representation requires t >= k >= 1");
  CascadeRep rep;
  rep.k = k;
  rep.t = t;
  BigInt rem = m;
  for (int i = 0; k - i >= 1 && sgn(rem) > 0; ++i) {
    const int level = k - i;
    const int colors = t - i;
    BigInt n = greedy_level_value(rem, level, colors);
    rem -= turan_binomial(n, level, colors);
    rep.terms.push_back(CascadeTerm{level, std::move(n)});
  }
  // The lemma guarantees these; a violation is surfaced loudly.
  if (sgn(rem) != 0 || rep.total() != m) {
    throw invariant_error("cascade representation of " + to_string(m) + " does not sum back");
  }
  for (std::size_t i = 0; i + 1 < rep.terms.size(); ++i) {
    BigInt bound = rep.terms[i].n - rep.terms[i].n / (t - static_cast<int>(i));
    if (!(bound > rep.terms[i + 1].n)) {
      throw invariant_error("cascade side condition fails between levels " +
                            std::to_string(rep.terms[i].level) + " and " +
                            std::to_string(rep.terms[i + 1].level) + " for m=" + to_string(m));
    }
  }
  const CascadeTerm& last = rep.terms.back();
  if (last.level < 1 || last.n < last.level) {
    throw invariant_error("cascade final term violates n >= level >= 1 for m=" + to_string(m));
  }
  return rep;
}

BigInt shadow_upper_bound(const CascadeRep& rep) {
  BigInt bound = 0;
  for (std::size_t i = 0; i < rep.terms.size(); ++i) {
    bound += turan_binomial(rep.terms[i].n, rep.terms[i].level + 1, rep.t - static_cast<int>(i));
  }
  return bound;
}

FaceCounts face_counts(const BitTensor& m) {
  const int t = m.t();
  if (t > 16) throw argument_error("face_counts supports t <= 16");
  FaceCounts fc;
  fc.counts.assign(t, 0);
  // i-faces = distinct projections of the 1-entries onto i-element axis sets.
  for (unsigned mask = 1; mask < (1u << t); ++mask) {
    std::vector<int> axes;
    for (int r = 0; r < t; ++r) {
      if (mask & (1u << r)) axes.push_back(r);
    }
    std::set<std::vector<int>> proj;
    std::vector<int> key(axes.size());
    for (const Coord& c : m.ones()) {
      for (std::size_t i = 0; i < axes.size(); ++i) key[i] = c[axes[i]];
      proj.insert(key);
    }
    fc.counts[axes.size() - 1] += proj.size();
  }
  return fc;
}

CorollaryCheck corollary_entry_bound(const BitTensor& m) {
  const int t = m.t();
  if (t < 3) throw argument_error("corollary_entry_bound requires t >= 3");
  BigInt smash_sum = 0;
  for (int r = 0; r < t; ++r) smash_sum += static_cast<unsigned long>(smash(m, r).ones_count());
  const BigInt ones(static_cast<unsigned long>(m.ones_count()));
  CorollaryCheck check;
  check.lhs = big_pow(BigInt(t), static_cast<unsigned long>(t)) *
              big_pow(ones, static_cast<unsigned long>(t - 1));
  check.rhs = big_pow(BigInt(2), static_cast<unsigned long>(t) * (t - 1)) *
              big_pow(smash_sum, static_cast<unsigned long>(t));
  check.holds = check.lhs <= check.rhs;
  return check;
}

}  // namespace tenpat
