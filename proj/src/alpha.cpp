#include "tenpat/alpha.hpp"

#include <numeric>

#include "tenpat/errors.hpp"

namespace tenpat {

BigRat default_alpha_base(int k) {
  if (k < 1) throw argument_error("alpha base requires k >= 1");
  const unsigned long ku = static_cast<unsigned long>(k);
  BigInt v = 2 * big_pow(BigInt(k), 4) * binomial(ku * ku, ku);
  return BigRat(v);
}

AlphaTable::AlphaTable(std::function<BigRat(int)> base) : base_(std::move(base)) {}

const BigRat& AlphaTable::get(int t, int k) {
  if (t < 2) throw argument_error("alpha requires t >= 2");
  if (k < 2) throw argument_error("alpha requires k >= 2");
  auto key = std::make_pair(t, k);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  BigRat value;
  if (t == 2) {
    value = base_(k);
  } else {
    const BigRat& prev = get(t - 1, k);
    BigRat p = BigRat(big_pow(BigInt(2), static_cast<unsigned long>(t))) *
               big_pow(prev, static_cast<unsigned long>(t));
    BigRat bracket = generalized_binomial(p - 1, static_cast<unsigned long>(k - 1)) / p;
    bracket.canonicalize();
    value = BigRat(2 * t * (k - 1)) * big_pow(bracket, static_cast<unsigned long>(t - 1));
    value.canonicalize();
  }
  return memo_.emplace(key, std::move(value)).first->second;
}

BigRat alpha(int t, int k) {
  AlphaTable table;
  return table.get(t, k);
}

RecursionCoefficientReport recursion_coefficient_report(int t) {
  if (t < 2) throw argument_error("recursion coefficient requires t >= 2");
  RecursionCoefficientReport report;
  report.t = t;
  // 2^t * alpha^(t/(t-1)) * p^(-1/(t-1)) with p = (2 alpha)^t collapses to
  // 2^(t - t/(t-1)); the alpha factors cancel exactly.
  long num = static_cast<long>(t) * (t - 2);
  long den = t - 1;
  long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 0) {
    num /= g;
    den /= g;
  }
  report.exponent_num = num;
  report.exponent_den = den;
  if (den == 1) {
    report.symbolic = "2^" + std::to_string(num);
  } else {
    report.symbolic = "2^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
  }
  // 2^(num/den) > 1/2  <=>  num/den > -1  <=>  num > -den.
  report.exceeds_half = num > -den;
  return report;
}

}  // namespace tenpat
