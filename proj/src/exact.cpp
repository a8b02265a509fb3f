#include "tenpat/exact.hpp"

#include "tenpat/errors.hpp"

namespace tenpat {

BigInt big_pow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

BigRat big_pow(const BigRat& base, unsigned long exp) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exp);
  BigRat out(num, den);
  out.canonicalize();
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(const BigInt& n, unsigned long k) {
  if (sgn(n) < 0) throw argument_error("binomial: negative n not supported");
  BigInt out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigRat generalized_binomial(const BigRat& x, unsigned long k) {
  BigRat prod(1);
  for (unsigned long i = 0; i < k; ++i) prod *= x - BigRat(static_cast<long>(i));
  prod /= BigRat(factorial(k));
  prod.canonicalize();
  return prod;
}

BigInt elementary_symmetric(const std::vector<BigInt>& values, unsigned long k) {
  // coef[j] accumulates e_j of the prefix processed so far.
  std::vector<BigInt> coef(k + 1, BigInt(0));
  coef[0] = 1;
  for (const BigInt& v : values) {
    for (unsigned long j = std::min<unsigned long>(k, coef.size() - 1); j >= 1; --j) {
      coef[j] += coef[j - 1] * v;
    }
  }
  return coef[k];
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRat& v) { return v.get_str(); }

double to_double(const BigRat& v) { return v.get_d(); }

}  // namespace tenpat
