#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "tenpat/alpha.hpp"
#include "tenpat/errors.hpp"
#include "tenpat/extremal.hpp"
#include "tenpat/oracles.hpp"
#include "tenpat/pattern.hpp"

using namespace tenpat;

TEST_CASE("f_exact against the enumeration oracle") {
  const Pattern id2 = make_identity(2, 2);
  CHECK(f_exact_serial(1, id2, 2).value == 1);
  CHECK(f_exact_serial(2, id2, 2).value == 3);
  CHECK(f_exact_serial(3, id2, 2).value == 5);
  CHECK(oracles::max_ones_avoiding_by_enumeration(2, id2.tensor(), 2) == 3);
  CHECK(oracles::max_ones_avoiding_by_enumeration(3, id2.tensor(), 2) == 5);

  const Pattern anti(BitTensor(Shape({2, 2}), {{0, 1}, {1, 0}}));
  for (int n = 1; n <= 3; ++n) {
    const SearchReport report = f_exact_serial(n, anti, 2);
    CHECK(report.exact);
    CHECK(report.value == oracles::max_ones_avoiding_by_enumeration(n, anti.tensor(), 2));
    REQUIRE(report.witness.has_value());
    CHECK(static_cast<long long>(report.witness->ones_count()) == report.value);
    CHECK(avoids(*report.witness, anti));
  }
}

TEST_CASE("patterns that cannot embed make the full tensor optimal") {
  const Pattern big = make_identity(2, 3);
  const SearchReport report = f_exact_serial(2, big, 2);
  CHECK(report.value == 4);
  REQUIRE(report.witness.has_value());
  CHECK(*report.witness == BitTensor::full(Shape({2, 2})));
}

TEST_CASE("empty pattern has no avoiders once it fits") {
  const Pattern empty(BitTensor(Shape({1, 1}), {}));
  const SearchReport report = f_exact_serial(2, empty, 2);
  CHECK(report.value == -1);
  CHECK(!report.witness.has_value());
  CHECK(count_avoiders_serial(2, empty, 2) == 0);
}

TEST_CASE("budget truncation is explicit") {
  const Pattern id2 = make_identity(2, 2);
  const SearchReport report = f_exact_serial(3, id2, 2, 3);
  CHECK(!report.exact);
  CHECK(report.value >= 0);  // seeded lower bound survives
}

TEST_CASE("cap guards the exact search") {
  const Pattern id2 = make_identity(2, 2);
  CHECK_THROWS_AS(f_exact_serial(6, id2, 2), resource_error);
  CHECK_NOTHROW(f_exact_serial(6, id2, 2, kDefaultSearchBudget, 36));
}

TEST_CASE("count_avoiders small values") {
  const Pattern id2 = make_identity(2, 2);
  CHECK(count_avoiders_serial(1, id2, 2) == 2);
  CHECK(count_avoiders_serial(2, id2, 2) == 12);
  const Pattern dot(BitTensor(Shape({1, 1}), {{0, 0}}));
  CHECK(count_avoiders_serial(1, dot, 2) == 1);
}

TEST_CASE("count_avoiders agrees with a selection-enumeration count") {
  auto count_by_oracle = [](int n, const BitTensor& p, int t) {
    Shape shape(std::vector<int>(t, n));
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << shape.cells()); ++code) {
      if (!oracles::contains_by_enumeration(BitTensor::from_code(shape, code), p)) ++count;
    }
    return count;
  };
  const Pattern id2 = make_identity(2, 2);
  CHECK(count_avoiders_serial(3, id2, 2) == count_by_oracle(3, id2.tensor(), 2));
  const Pattern sf = make_sunflower(3, SunflowerSpec{{2}, {0}}, 2, Shape({2, 2, 1}));
  CHECK(count_avoiders_serial(2, sf, 3) == count_by_oracle(2, sf.tensor(), 3));
}

TEST_CASE("klazar doubling") {
  const Pattern id2 = make_identity(2, 2);
  const KlazarCheck check = klazar_check(1, id2, 2);
  CHECK(check.lhs == BigInt(12));
  CHECK(check.rhs == BigInt(30));
  CHECK(check.holds);
  CHECK(check.f_value == 1);

  // Pattern too large for both sides of the doubling at n=1.
  const Pattern big = make_identity(2, 3);
  const KlazarCheck vac = klazar_check(1, big, 2);
  CHECK(vac.lhs == BigInt(16));
  CHECK(vac.rhs == BigInt(30));
  CHECK(vac.holds);
}

TEST_CASE("klazar block contraction") {
  const BitTensor m(Shape({4, 4}), {{0, 0}, {3, 3}});
  const BitTensor image = klazar_contract(m);
  CHECK(image.shape() == Shape({2, 2}));
  CHECK(image.ones() == std::vector<Coord>{{0, 0}, {1, 1}});
  CHECK_THROWS_AS(klazar_contract(BitTensor::zeros(Shape({3, 3}))), argument_error);
}

TEST_CASE("sunflower reduction inequality") {
  const Pattern p = make_sunflower(3, SunflowerSpec{{2}, {0}}, 2, Shape({2, 2, 1}));
  const SunflowerReduction sr = sunflower_reduction_check(2, p);
  CHECK(sr.core_axis == 2);
  CHECK(sr.holds);
  // P' is the 2x2 identity, so the right side is n * (2n-1) at n=2.
  CHECK(sr.reduced_pattern == make_identity(2, 2).tensor());
  CHECK(sr.rhs == 2 * 3);
  CHECK(sr.lhs == oracles::max_ones_avoiding_by_enumeration(2, p.tensor(), 3));

  // n=1: both searches run over single-cell tensors; the pattern cannot
  // embed on either side.
  const SunflowerReduction tiny = sunflower_reduction_check(1, p);
  CHECK(tiny.lhs == 1);
  CHECK(tiny.rhs == 1);
  CHECK(tiny.holds);

  CHECK_THROWS_AS(sunflower_reduction_check(2, make_identity(3, 2)), argument_error);
  CHECK_THROWS_AS(sunflower_reduction_check(1, Pattern(BitTensor(Shape({2, 2}), {})), SunflowerSpec{{0}, {0}}),
                  argument_error);
}

TEST_CASE("slice reduction fails for padded core axes and is reported faithfully") {
  // Core axis 0 carries an unused hyperplane at index 0. Filling slice 0
  // completely costs nothing towards containment, so the extremal value
  // beats n * f' : the inequality is specific to trimmed cores.
  const Pattern padded(BitTensor(Shape({2, 2, 2}), {{1, 0, 1}, {1, 1, 0}}));
  REQUIRE(padded.sunflower().has_value());
  CHECK(padded.sunflower()->axes == std::vector<int>{0});
  const SunflowerReduction sr = sunflower_reduction_check(2, padded);
  CHECK(sr.lhs == 7);
  CHECK(sr.rhs == 6);
  CHECK(!sr.holds);
  CHECK(sr.lhs == oracles::max_ones_avoiding_by_enumeration(2, padded.tensor(), 3));
  CHECK(sr.rhs == 2 * oracles::max_ones_avoiding_by_enumeration(2, sr.reduced_pattern, 2));

  // The trimmed version of the same pattern satisfies the bound with
  // equality.
  const Pattern trimmed(BitTensor(Shape({1, 2, 2}), {{0, 0, 1}, {0, 1, 0}}));
  const SunflowerReduction ok = sunflower_reduction_check(2, trimmed);
  CHECK(ok.lhs == 6);
  CHECK(ok.rhs == 6);
  CHECK(ok.holds);
}

TEST_CASE("latin enumeration counts") {
  CHECK(latin_count_serial(3, 2) == 6);
  CHECK(latin_count_serial(4, 2) == 24);
  CHECK(latin_count_serial(1, 3) == 1);
  CHECK(latin_count_serial(2, 3) == 2);
  CHECK(latin_count_serial(3, 3) == 12);
  CHECK(latin_count_serial(2, 4) == 2);
  CHECK(oracles::count_latin_squares(3) == 12);
  CHECK_THROWS_AS(latin_count_serial(5, 3), resource_error);
  // The reach table can be lifted explicitly; order-5 Latin squares.
  CHECK(latin_count(5, 3, 1, true) == 161280);
  CHECK(latin_count(5, 3, 0, true) == 161280);
}

TEST_CASE("latin enumeration yields each tensor exactly once") {
  auto all = latin_matrices(3, 3);
  std::sort(all.begin(), all.end());
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  CHECK(all.size() == 12);
}

TEST_CASE("order-2 latin cubes are the two parity classes") {
  const auto cubes = latin_matrices(2, 3);
  REQUIRE(cubes.size() == 2);
  const BitTensor even = make_cyclic_latin(2, 3);
  const BitTensor odd(Shape({2, 2, 2}), {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}});
  CHECK(std::count(cubes.begin(), cubes.end(), even) == 1);
  CHECK(std::count(cubes.begin(), cubes.end(), odd) == 1);
  for (const BitTensor& m : cubes) CHECK(is_latin(m));
}

TEST_CASE("alpha argument validation") {
  CHECK_THROWS_AS(alpha(1, 2), argument_error);
  CHECK_THROWS_AS(alpha(2, 1), argument_error);
}

TEST_CASE("latin avoider counting") {
  const Pattern id32 = make_identity(3, 2);
  // Both order-2 cubes miss one of the two diagonal entries.
  CHECK(latin_count_avoiders_serial(2, 3, id32) == 2);

  // A pattern bigger than the order never embeds.
  CHECK(latin_count_avoiders_serial(2, 3, make_identity(3, 3)) == latin_count_serial(2, 3));

  // Growing the pattern entrywise can only grow the avoider set.
  const Pattern small(BitTensor(Shape({2, 2, 2}), {{0, 0, 0}}));
  const Pattern larger(BitTensor(Shape({2, 2, 2}), {{0, 0, 0}, {1, 1, 1}}));
  CHECK(latin_count_avoiders_serial(3, 3, small) <= latin_count_avoiders_serial(3, 3, larger));
}
