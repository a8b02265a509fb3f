#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tenpat/errors.hpp"
#include "tenpat/oracles.hpp"
#include "tenpat/pattern.hpp"
#include "tenpat/shadow.hpp"

using namespace tenpat;

TEST_CASE("turan binomials") {
  CHECK(turan_binomial(std::uint64_t{6}, 2, 3) == BigInt(12));
  CHECK(turan_binomial(std::uint64_t{5}, 2, 2) == BigInt(6));  // K_{3,2} has 6 edges
  CHECK(turan_binomial(std::uint64_t{7}, 4, 3) == BigInt(0));  // k > t
  CHECK(turan_binomial(std::uint64_t{0}, 0, 2) == BigInt(1));
  CHECK(turan_binomial(std::uint64_t{0}, 1, 2) == BigInt(0));
  // Multiples of t collapse to binom(t,k) (n/t)^k.
  CHECK(turan_binomial(std::uint64_t{9}, 3, 3) == BigInt(27));

  for (int t = 1; t <= 4; ++t) {
    for (int n = 0; n <= 10; ++n) {
      for (int k = 0; k <= n + 1; ++k) {
        CHECK(turan_binomial(static_cast<std::uint64_t>(n), k, t) ==
              oracles::count_turan_cliques(n, t, static_cast<unsigned long>(k)));
      }
    }
  }
}

TEST_CASE("cascade representation of exactly representable values") {
  const CascadeRep rep = cascade_representation(BigInt(12), 2, 3);
  REQUIRE(rep.terms.size() == 1);
  CHECK(rep.terms[0].level == 2);
  CHECK(rep.terms[0].n == BigInt(6));
  CHECK(rep.total() == BigInt(12));
}

TEST_CASE("cascade representation of 1") {
  for (int t = 1; t <= 4; ++t) {
    for (int k = 1; k <= t; ++k) {
      const CascadeRep rep = cascade_representation(BigInt(1), k, t);
      REQUIRE(rep.terms.size() == 1);
      CHECK(rep.terms[0].level == k);
      CHECK(rep.terms[0].n == BigInt(k));
      CHECK(rep.total() == BigInt(1));
    }
  }
}

TEST_CASE("cascade uniqueness against brute force at small scale") {
  for (int t = 1; t <= 3; ++t) {
    for (int k = 1; k <= t; ++k) {
      for (std::uint64_t m = 1; m <= 60; ++m) {
        const auto reps = oracles::all_cascade_representations(m, k, t);
        REQUIRE(reps.size() == 1);
        const CascadeRep greedy = cascade_representation(BigInt(m), k, t);
        REQUIRE(reps[0].size() == greedy.terms.size());
        for (std::size_t i = 0; i < greedy.terms.size(); ++i) {
          CHECK(reps[0][i].first == greedy.terms[i].level);
          CHECK(BigInt(static_cast<long>(reps[0][i].second)) == greedy.terms[i].n);
        }
      }
    }
  }
}

TEST_CASE("cascade argument validation") {
  CHECK_THROWS_AS(cascade_representation(BigInt(0), 2, 3), argument_error);
  CHECK_THROWS_AS(cascade_representation(BigInt(5), 3, 2), argument_error);
}

TEST_CASE("shadow upper bound") {
  CHECK(shadow_upper_bound(cascade_representation(BigInt(12), 2, 3)) == BigInt(8));
  // At the top level k = t the next level has no cliques at all.
  const CascadeRep top = cascade_representation(BigInt(27), 3, 3);
  REQUIRE(top.terms.size() == 1);
  CHECK(shadow_upper_bound(top) == BigInt(0));
}

TEST_CASE("face counts") {
  const FaceCounts single = face_counts(BitTensor(Shape({2, 2, 2}), {{1, 0, 1}}));
  CHECK(single.counts == std::vector<std::uint64_t>{3, 3, 1});

  const FaceCounts id2 = face_counts(BitTensor(Shape({2, 2}), {{0, 0}, {1, 1}}));
  CHECK(id2.counts == std::vector<std::uint64_t>{4, 2});

  const FaceCounts latin = face_counts(make_cyclic_latin(2, 3));
  CHECK(latin.counts == std::vector<std::uint64_t>{6, 12, 4});

  // cl_t equals the ones count, cl_{t-1} the sum of smash counts.
  const BitTensor m(Shape({2, 3, 2}), {{0, 0, 0}, {1, 2, 1}, {0, 2, 1}});
  const FaceCounts fc = face_counts(m);
  CHECK(fc.cl(3) == m.ones_count());
  std::uint64_t smash_sum = 0;
  for (int r = 0; r < 3; ++r) smash_sum += smash(m, r).ones_count();
  CHECK(fc.cl(2) == smash_sum);
}

TEST_CASE("corollary entry bound") {
  const auto zero = corollary_entry_bound(BitTensor::zeros(Shape({2, 2, 2})));
  CHECK(zero.holds);

  const auto latin = corollary_entry_bound(make_cyclic_latin(2, 3));
  CHECK(latin.lhs == BigInt(27 * 16));
  CHECK(latin.rhs == BigInt(64) * BigInt(12 * 12 * 12));
  CHECK(latin.holds);

  CHECK_THROWS_AS(corollary_entry_bound(BitTensor::full(Shape({2, 2}))), argument_error);
}

TEST_CASE("degenerate guard: few (t-1)-faces force an empty top level") {
  for (std::uint64_t code = 0; code < 512; ++code) {
    const BitTensor m = BitTensor::from_code(Shape({2, 2, 2}), code % 256);
    const FaceCounts fc = face_counts(m);
    if (fc.cl(2) < 3) CHECK(fc.cl(3) == 0);
  }
}
