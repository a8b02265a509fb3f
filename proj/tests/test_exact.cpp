#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tenpat/exact.hpp"

using namespace tenpat;

TEST_CASE("binomial agrees with Pascal recurrence") {
  for (unsigned long n = 0; n <= 20; ++n) {
    for (unsigned long k = 0; k <= n + 1; ++k) {
      BigInt direct = binomial(n, k);
      BigInt pascal = (k == 0)  ? BigInt(1)
                      : (k > n) ? BigInt(0)
                                : binomial(n - 1, k - 1) + binomial(n - 1, k);
      CHECK(direct == pascal);
    }
  }
}

TEST_CASE("generalized binomial matches integer binomial on integers") {
  for (long n = 0; n <= 12; ++n) {
    for (unsigned long k = 0; k <= 6; ++k) {
      CHECK(generalized_binomial(BigRat(n), k) ==
            BigRat(binomial(static_cast<unsigned long>(n), k)));
    }
  }
}

TEST_CASE("generalized binomial on rationals") {
  // C(7/2, 2) = (7/2)(5/2)/2 = 35/8
  CHECK(generalized_binomial(BigRat(7, 2), 2) == BigRat(35, 8));
  // C(1/2, 3) = (1/2)(-1/2)(-3/2)/6 = 1/16
  CHECK(generalized_binomial(BigRat(1, 2), 3) == BigRat(1, 16));
}

TEST_CASE("elementary symmetric polynomial by direct expansion") {
  std::vector<BigInt> vals{2, 3, 5};
  CHECK(elementary_symmetric(vals, 0) == BigInt(1));
  CHECK(elementary_symmetric(vals, 1) == BigInt(10));
  CHECK(elementary_symmetric(vals, 2) == BigInt(2 * 3 + 2 * 5 + 3 * 5));
  CHECK(elementary_symmetric(vals, 3) == BigInt(30));
  CHECK(elementary_symmetric(vals, 4) == BigInt(0));
}

TEST_CASE("powers") {
  CHECK(big_pow(BigInt(2), 40) == BigInt("1099511627776"));
  CHECK(big_pow(BigRat(2, 3), 3) == BigRat(8, 27));
  CHECK(big_pow(BigRat(5), 0) == BigRat(1));
}

TEST_CASE("uint64 bridging") {
  BigInt v = big_pow(BigInt(2), 64) - 1;
  CHECK(fits_uint64(v));
  CHECK(to_uint64(v) == UINT64_MAX);
  CHECK(!fits_uint64(v + 1));
  CHECK(to_uint64(BigInt(12345)) == 12345);
}

TEST_CASE("decimal strings") {
  CHECK(to_string(BigInt(0)) == "0");
  CHECK(to_string(big_pow(BigInt(10), 25)) == "10000000000000000000000000");
  BigRat q(22, 8);
  q.canonicalize();
  CHECK(to_string(q) == "11/4");
}
