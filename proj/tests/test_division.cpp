#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tenpat/alpha.hpp"
#include "tenpat/division.hpp"
#include "tenpat/errors.hpp"
#include "tenpat/pattern.hpp"

using namespace tenpat;

TEST_CASE("division counting") {
  CHECK(count_divisions(3, 2, 2) == BigInt(4));
  CHECK(count_divisions(5, 3, 3) == BigInt(216));
  CHECK(count_divisions(4, 1, 2) == BigInt(1));
  CHECK(count_divisions(4, 4, 2) == BigInt(1));
  CHECK_THROWS_AS(count_divisions(3, 4, 2), argument_error);

  for (int t = 1; t <= 3; ++t) {
    for (int p = 1; p <= 5; ++p) {
      for (int k = 1; k <= p; ++k) {
        std::uint64_t seen = 0;
        for_each_division(Shape(std::vector<int>(t, p)), k, [&](const Division&) { ++seen; });
        CHECK(BigInt(seen) == count_divisions(p, k, t));
      }
    }
  }
}

TEST_CASE("division codes are a lexicographic bijection") {
  const Shape shape({3, 3});
  std::vector<Division> divisions;
  for_each_division(shape, 2, [&](const Division& d) { divisions.push_back(d); });
  REQUIRE(divisions.size() == 4);
  CHECK(divisions[0].cuts == std::vector<std::vector<int>>{{1}, {1}});
  CHECK(divisions[1].cuts == std::vector<std::vector<int>>{{1}, {2}});
  CHECK(divisions[2].cuts == std::vector<std::vector<int>>{{2}, {1}});
  CHECK(divisions[3].cuts == std::vector<std::vector<int>>{{2}, {2}});
  for (std::uint64_t code = 0; code < divisions.size(); ++code) {
    CHECK(division_from_code(shape, 2, code) == divisions[code]);
    CHECK(division_code(shape, 2, divisions[code]) == code);
  }
}

TEST_CASE("contract") {
  const Shape shape({2, 2});
  Division singletons{{{1}, {1}}};
  const BitTensor id(shape, {{0, 0}, {1, 1}});
  CHECK(contract(id, singletons) == id);

  Division whole{{{}, {}}};
  CHECK(contract(id, whole) == BitTensor::full(Shape({1, 1})));
  CHECK(contract(BitTensor::zeros(shape), whole) == BitTensor::zeros(Shape({1, 1})));

  Division bad{{{1}, {5}}};
  CHECK_THROWS_AS(contract(id, bad), argument_error);
}

TEST_CASE("is_full") {
  Division halves{{{2}, {2}}};
  CHECK(is_full(BitTensor::full(Shape({4, 4})), halves));
  CHECK(!is_full(BitTensor::zeros(Shape({4, 4})), halves));
  // Cyclic permutation of order 4 puts a 1 in each quadrant.
  CHECK(is_full(make_cyclic_latin(4, 2), halves));
}

TEST_CASE("find_full_division") {
  const auto first = find_full_division_serial(BitTensor::full(Shape({3, 3})), 2);
  REQUIRE(first.has_value());
  CHECK(first->cuts == std::vector<std::vector<int>>{{1}, {1}});

  const BitTensor quadrants(Shape({4, 4}), {{0, 0}, {0, 2}, {2, 0}, {2, 2}});
  const auto found = find_full_division_serial(quadrants, 2);
  REQUIRE(found.has_value());
  CHECK(is_full(quadrants, *found));

  // Fewer than k^t ones cannot produce a full division.
  const BitTensor sparse(Shape({4, 4}), {{0, 0}, {1, 1}, {2, 2}});
  CHECK(!find_full_division_serial(sparse, 2).has_value());
}

TEST_CASE("is_heavy uses the exact alpha threshold") {
  CHECK(!is_heavy(BitTensor::zeros(Shape({3, 3})), 2));
  CHECK(!is_heavy(BitTensor::full(Shape({1, 1})), 2));
  // alpha_2(2) = 192, so even the full 6x6 matrix stays light.
  CHECK(!is_heavy(BitTensor::full(Shape({6, 6})), 2));
  CHECK_THROWS_AS(is_heavy(BitTensor::full(Shape({2, 3})), 2), argument_error);
}

TEST_CASE("uniform blocks and composition") {
  const Shape shape({4, 4});
  const Division blocks = uniform_blocks(shape, 2);
  CHECK(blocks.cuts == std::vector<std::vector<int>>{{2}, {2}});
  CHECK_THROWS_AS(uniform_blocks(Shape({3, 4}), 2), argument_error);

  // Splitting into quarters then halving the quarters equals halving.
  const Division quarters{{{1, 2, 3}, {1, 2, 3}}};
  const Division outer{{{2}, {2}}};
  CHECK(compose_divisions(shape, quarters, outer).cuts ==
        std::vector<std::vector<int>>{{2}, {2}});
}

TEST_CASE("stack_blocks") {
  const BitTensor a(Shape({2, 2}), {{0, 0}});
  const BitTensor b(Shape({2, 2}), {{1, 1}});
  const BitTensor stacked = stack_blocks({a, b}, 0);
  CHECK(stacked.shape() == Shape({4, 2}));
  CHECK(stacked.ones() == std::vector<Coord>{{0, 0}, {3, 1}});
}

TEST_CASE("pigeonhole extraction") {
  // Three full blocks: the first division is shared, the first two blocks
  // are selected, and the lift is full on the stacked matrix.
  const BitTensor full = BitTensor::full(Shape({2, 2, 2}));
  const std::vector<BitTensor> blocks{full, full, full};
  const auto extraction = extract_full_division_pigeonhole(blocks, 0, 2);
  REQUIRE(extraction.has_value());
  CHECK(extraction->block_indices == std::vector<int>{0, 1});
  CHECK(is_full(stack_blocks(blocks, 0), extraction->division));

  // One useful block only: no k blocks share anything.
  const std::vector<BitTensor> lonely{full, BitTensor::zeros(Shape({2, 2, 2})),
                                      BitTensor::zeros(Shape({2, 2, 2}))};
  CHECK(!extract_full_division_pigeonhole(lonely, 0, 2).has_value());

  // t=2 sanity: 1-dimensional smashes; all-ones vectors admit a k-division
  // exactly when p >= k.
  const BitTensor flat = BitTensor::full(Shape({2, 2}));
  CHECK(extract_full_division_pigeonhole({flat, flat}, 0, 2).has_value());
  const BitTensor tiny = BitTensor::full(Shape({1, 1}));
  CHECK(!extract_full_division_pigeonhole({tiny, tiny}, 0, 2).has_value());
}

TEST_CASE("oversized division spaces hit the enumeration cap") {
  // binom(39,19)^2 is astronomically past any cap.
  CHECK_THROWS_AS(division_space_size(Shape({40, 40}), 20), resource_error);
  CHECK_THROWS_AS(find_full_division_serial(BitTensor::full(Shape({40, 40})), 20),
                  resource_error);
}

TEST_CASE("pigeonhole least-witness route above the exhaustive block side") {
  // p = 7 exceeds the exhaustive threshold; identical dense blocks share
  // their least witness, which lifts to a full division of the stack.
  std::vector<Coord> ones;
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      for (int l = 0; l < 7; ++l) {
        if ((i + 2 * j + 3 * l) % 2 == 0) ones.push_back({i, j, l});
      }
    }
  }
  const BitTensor block(Shape({7, 7, 7}), ones);
  const std::vector<BitTensor> blocks{block, block, block};
  const auto extraction = extract_full_division_pigeonhole(blocks, 1, 2);
  REQUIRE(extraction.has_value());
  CHECK(extraction->block_indices == std::vector<int>{0, 1});
  CHECK(is_full(stack_blocks(blocks, 1), extraction->division));
}

TEST_CASE("division validation") {
  Division d{{{1}, {1}}};
  CHECK_NOTHROW(d.validate_for(Shape({2, 2})));
  CHECK_THROWS_AS(d.validate_for(Shape({2})), argument_error);
  Division zero_cut{{{0}, {1}}};
  CHECK_THROWS_AS(zero_cut.validate_for(Shape({2, 2})), argument_error);
  Division beyond{{{2}, {1}}};
  CHECK_THROWS_AS(beyond.validate_for(Shape({2, 2})), argument_error);
}
