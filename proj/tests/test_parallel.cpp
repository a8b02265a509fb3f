#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tenpat/division.hpp"
#include "tenpat/extremal.hpp"
#include "tenpat/pattern.hpp"
#include "tenpat/properties.hpp"

using namespace tenpat;

// The OpenMP kernels must agree with their serial reference implementations;
// the property bundles the individual comparisons.
TEST_CASE("parallel kernels match the serial references") {
  SuiteConfig cfg;
  cfg.threads = 0;  // all hardware threads
  const PropertyResult res = checks::parallel_matches_serial(cfg);
  INFO(res.detail);
  CHECK(res.pass);
  CHECK(res.cases > 0);
}

TEST_CASE("parallel search is reproducible run to run") {
  const Pattern id2 = make_identity(2, 2);
  const SearchReport a = f_exact(4, id2, 2, kDefaultSearchBudget, 0);
  const SearchReport b = f_exact(4, id2, 2, kDefaultSearchBudget, 0);
  CHECK(a.value == b.value);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(*a.witness == *b.witness);

  CHECK(count_avoiders(3, id2, 2, 0) == count_avoiders(3, id2, 2, 0));
}

TEST_CASE("thread-count conventions") {
  const Pattern id2 = make_identity(2, 2);
  // threads=1 must take the serial path bit for bit.
  const SearchReport one = f_exact(3, id2, 2, kDefaultSearchBudget, 1);
  const SearchReport ser = f_exact_serial(3, id2, 2);
  CHECK(one.value == ser.value);
  REQUIRE(one.witness.has_value());
  CHECK(*one.witness == *ser.witness);
  CHECK(one.nodes == ser.nodes);
}
