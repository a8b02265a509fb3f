#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tenpat {

// All counts, thresholds and alpha constants are kept exact. GMP supplies the
// arithmetic; these aliases and helpers are the only GMP surface the rest of
// the library sees.
using BigInt = mpz_class;
using BigRat = mpq_class;

BigInt big_pow(const BigInt& base, unsigned long exp);
BigRat big_pow(const BigRat& base, unsigned long exp);

BigInt factorial(unsigned long n);

// C(n, k), zero for k > n.
BigInt binomial(const BigInt& n, unsigned long k);
BigInt binomial(unsigned long n, unsigned long k);

// Falling-factorial binomial x(x-1)...(x-k+1)/k!, defined for rational x.
// Agrees with binomial() on non-negative integers.
BigRat generalized_binomial(const BigRat& x, unsigned long k);

// Elementary symmetric polynomial e_k over the given values.
BigInt elementary_symmetric(const std::vector<BigInt>& values, unsigned long k);

std::string to_string(const BigInt& v);
std::string to_string(const BigRat& v);

inline bool fits_uint64(const BigInt& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_uint64(const BigInt& v) {
  std::uint64_t lo = mpz_get_ui(v.get_mpz_t());
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 32) {
    BigInt hi = v >> 32;
    lo = (static_cast<std::uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) |
         (lo & 0xffffffffull);
  }
  return lo;
}

double to_double(const BigRat& v);

}  // namespace tenpat
