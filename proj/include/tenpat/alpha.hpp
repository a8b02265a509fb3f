#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "tenpat/exact.hpp"

namespace tenpat {

// Adopted Marcus-Tardos-style base constant: alpha_2(k) = 2 k^4 C(k^2, k).
BigRat default_alpha_base(int k);

// alpha_t(k) = 2t(k-1) [ C(P-1, k-1) / P ]^(t-1) with P = 2^t alpha_{t-1}(k)^t,
// evaluated exactly over rationals (the generalized binomial handles the
// non-integer P that appears from t = 4 on). The base level is configurable
// so a different published alpha_2 can be substituted.
class AlphaTable {
 public:
  explicit AlphaTable(std::function<BigRat(int)> base = default_alpha_base);
  const BigRat& get(int t, int k);

 private:
  std::function<BigRat(int)> base_;
  std::map<std::pair<int, int>, BigRat> memo_;
};

// Stateless convenience wrapper over a default-based AlphaTable.
BigRat alpha(int t, int k);

// The contraction-step coefficient obtained from fixing the block side at
// P = (2 alpha_{t-1}(k))^t: it simplifies to 2^(t - t/(t-1)), which is never
// below 1/2. Reported, not asserted.
struct RecursionCoefficientReport {
  int t = 0;
  long exponent_num = 0;  // exponent t - t/(t-1) = t(t-2)/(t-1) as a fraction
  long exponent_den = 1;
  std::string symbolic;   // e.g. "2^(3/2)"
  bool exceeds_half = false;
};

RecursionCoefficientReport recursion_coefficient_report(int t);

}  // namespace tenpat
