#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tenpat/containment.hpp"
#include "tenpat/errors.hpp"
#include "tenpat/oracles.hpp"
#include "tenpat/pattern.hpp"

using namespace tenpat;

TEST_CASE("identity embeds in itself with the least witness") {
  const Pattern id2 = make_identity(2, 2);
  const auto result = find_embedding(id2.tensor(), id2);
  REQUIRE(result.embedding.has_value());
  CHECK(result.embedding->selections ==
        std::vector<std::vector<int>>{{0, 1}, {0, 1}});
  CHECK(result.nodes > 0);
}

TEST_CASE("anti-diagonal avoids the identity") {
  const Pattern id2 = make_identity(2, 2);
  const BitTensor anti(Shape({2, 2}), {{0, 1}, {1, 0}});
  CHECK(avoids(anti, id2));
  CHECK(!oracles::contains_by_enumeration(anti, id2.tensor()));
}

TEST_CASE("increasing staircase contains the identity") {
  // Rows {0,1}, {1,2}, {2} stacked: (0,0) and (1,1) already form the
  // pattern, which the selection-enumeration oracle confirms.
  const BitTensor stair(Shape({3, 3}), {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}});
  const Pattern id2 = make_identity(2, 2);
  CHECK(oracles::contains_by_enumeration(stair, id2.tensor()));
  const auto result = find_embedding(stair, id2);
  REQUIRE(result.embedding.has_value());
  CHECK(result.embedding->selections ==
        std::vector<std::vector<int>>{{0, 1}, {0, 1}});
  CHECK(dominates(subtensor(stair, result.embedding->selections), id2.tensor()));
}

TEST_CASE("full tensors contain every pattern that fits") {
  const BitTensor full = BitTensor::full(Shape({3, 3, 3}));
  for (std::uint64_t code = 0; code < 256; ++code) {
    const BitTensor cand = BitTensor::from_code(Shape({2, 2, 2}), code);
    if (!validate_pattern(cand)) continue;
    CHECK(!avoids(full, Pattern(cand)));
  }
}

TEST_CASE("zero matrix avoids any pattern with a 1") {
  const BitTensor zero = BitTensor::zeros(Shape({3, 3}));
  CHECK(avoids(zero, make_identity(2, 2)));
  CHECK(avoids(zero, Pattern(BitTensor(Shape({1, 1}), {{0, 0}}))));
  // ...but contains the empty pattern.
  CHECK(!avoids(zero, Pattern(BitTensor(Shape({2, 2}), {}))));
}

TEST_CASE("cyclic latin cube of order 3 contains the 3-dimensional identity") {
  const BitTensor latin = make_cyclic_latin(3, 3);
  const Pattern id3 = make_identity(3, 3);
  // Equal shapes leave a single admissible selection; the main diagonal sums
  // are 0, 3, 6, all divisible by 3.
  CHECK(oracles::contains_by_enumeration(latin, id3.tensor()));
  CHECK(!avoids(latin, id3));
}

TEST_CASE("oversized patterns never embed") {
  const Pattern big = make_identity(2, 3);
  const auto result = find_embedding(BitTensor::full(Shape({2, 2})), big);
  CHECK(!result.embedding.has_value());
  CHECK(result.nodes == 0);
}

TEST_CASE("dimension mismatch is an error") {
  CHECK_THROWS_AS(find_embedding(BitTensor::full(Shape({2, 2, 2})), make_identity(2, 2)),
                  argument_error);
}

TEST_CASE("node budget surfaces as a resource error") {
  const BitTensor full = BitTensor::full(Shape({4, 4}));
  std::vector<Coord> ones;
  for (int i = 0; i < 3; ++i) ones.push_back({i, i});
  const Pattern p(BitTensor(Shape({3, 3}), ones));
  CHECK_THROWS_AS(find_embedding(full, p, 2), resource_error);
}

TEST_CASE("embedding handles patterns with empty slices") {
  // Pattern 3x3 with ones only at (0,0) and (2,2); middle indices must be
  // filled monotonically in the witness.
  const Pattern p(BitTensor(Shape({3, 3}), {{0, 0}, {2, 2}}));
  const BitTensor m(Shape({4, 4}), {{0, 1}, {3, 3}});
  const auto result = find_embedding(m, p);
  REQUIRE(result.embedding.has_value());
  const auto& sel = result.embedding->selections;
  CHECK(sel[0].size() == 3);
  CHECK(sel[1].size() == 3);
  CHECK(dominates(subtensor(m, sel), p.tensor()));
}

TEST_CASE("random agreement with the enumeration oracle") {
  std::mt19937_64 rng(20448);
  for (int trial = 0; trial < 400; ++trial) {
    const int t = 2 + static_cast<int>(rng() % 2);
    std::vector<int> mdims(t), pdims(t);
    for (int r = 0; r < t; ++r) {
      mdims[r] = 2 + static_cast<int>(rng() % 2);
      pdims[r] = 1 + static_cast<int>(rng() % 2);
    }
    std::vector<Coord> mones;
    Shape mshape(mdims);
    for (std::uint64_t i = 0; i < mshape.cells(); ++i) {
      if (rng() % 100 < 55) {
        Coord c(t);
        std::uint64_t idx = i;
        for (int r = t - 1; r >= 0; --r) {
          c[r] = static_cast<int>(idx % mdims[r]);
          idx /= mdims[r];
        }
        mones.push_back(c);
      }
    }
    const BitTensor m(mshape, mones);
    BitTensor ptensor = BitTensor::zeros(Shape(pdims));
    for (int tries = 0; tries < 32; ++tries) {
      const Shape pshape(pdims);
      const std::uint64_t code = rng() % (std::uint64_t{1} << pshape.cells());
      BitTensor cand = BitTensor::from_code(pshape, code);
      if (validate_pattern(cand)) {
        ptensor = cand;
        break;
      }
    }
    const Pattern p(ptensor);
    const auto mine = find_embedding(m, p);
    const auto reference = oracles::first_embedding_by_enumeration(m, p.tensor());
    CHECK(mine.embedding.has_value() == reference.has_value());
    if (mine.embedding) {
      // The witness is the lexicographically least selections tuple.
      CHECK(mine.embedding->selections == *reference);
    }
  }
}

TEST_CASE("witness minimality across axes") {
  // Entry-greedy search would pick axis-1 value 2 here; the least tuple
  // trades it for a larger axis-2 index.
  const BitTensor m(Shape({2, 3, 2}),
                    {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}, {1, 2, 0}, {1, 2, 1}, {0, 2, 1}, {1, 0, 1}});
  const Pattern p(BitTensor(Shape({2, 2, 1}), {{0, 0, 0}, {1, 1, 0}}));
  const auto mine = find_embedding(m, p);
  REQUIRE(mine.embedding.has_value());
  CHECK(mine.embedding->selections == *oracles::first_embedding_by_enumeration(m, p.tensor()));
}
