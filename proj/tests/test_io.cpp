#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tenpat/errors.hpp"
#include "tenpat/io.hpp"
#include "tenpat/pattern.hpp"

using namespace tenpat;

TEST_CASE("tensor parsing accepts the documented format") {
  const std::string text = R"({"t": 2, "shape": [2, 2], "ones": [[0, 0], [1, 1]]})";
  const BitTensor m = tensor_from_string(text);
  CHECK(m == BitTensor(Shape({2, 2}), {{0, 0}, {1, 1}}));
}

TEST_CASE("tensor parsing rejects violations with precise locations") {
  auto reject = [](const std::string& text, const std::string& needle) {
    CHECK_THROWS_WITH_AS(tensor_from_string(text, "in"), doctest::Contains(needle.c_str()),
                         parse_error);
  };
  reject("{", "in:");
  reject(R"({"shape": [2], "ones": []})", "missing field \"t\"");
  reject(R"({"t": 0, "shape": [], "ones": []})", "in.t");
  reject(R"({"t": 2, "shape": [2], "ones": []})", "in.shape");
  reject(R"({"t": 1, "shape": [0], "ones": []})", "in.shape[0]");
  reject(R"({"t": 2, "shape": [2, 2], "ones": [[0]]})", "in.ones[0]");
  reject(R"({"t": 2, "shape": [2, 2], "ones": [[0, 2]]})", "out of range");
  reject(R"({"t": 2, "shape": [2, 2], "ones": [[1, 1], [0, 0]]})", "not sorted");
  reject(R"({"t": 2, "shape": [2, 2], "ones": [[0, 0], [0, 0]]})", "duplicate");
  reject(R"({"t": 2.5, "shape": [2, 2], "ones": []})", "expected an integer");
  // Overflowing literals surface as parse errors, not library exceptions.
  reject("71e749", "number overflow");
  reject(R"({"t": 99999999999999999999, "shape": [2], "ones": []})", "in");
  reject(R"({"t": 4294967298, "shape": [2, 2], "ones": []})", "out of range");
}

TEST_CASE("emitted tensors re-parse to equal values") {
  const BitTensor latin = make_cyclic_latin(3, 3);
  CHECK(tensor_from_string(tensor_to_json(latin).dump()) == latin);
  const BitTensor empty = BitTensor::zeros(Shape({1, 5}));
  CHECK(tensor_from_string(tensor_to_json(empty).dump()) == empty);
}

TEST_CASE("big integers fall back to decimal strings") {
  CHECK(big_to_json(BigInt(192)).is_number());
  const BigInt huge = big_pow(BigInt(10), 30);
  const Json j = big_to_json(huge);
  REQUIRE(j.is_string());
  CHECK(j.get<std::string>() == "1000000000000000000000000000000");
  const Json r = rat_to_json(BigRat(3, 4));
  CHECK(r["num"] == 3);
  CHECK(r["den"] == 4);
}

TEST_CASE("classification serialization") {
  const Json j = classification_to_json(classify_tensor(make_identity(2, 2).tensor()));
  CHECK(j["valid"] == true);
  CHECK(j["free"] == true);
  CHECK(j["permutation"] == true);
  CHECK(j["latin"] == true);
  CHECK(j["sunflower_core"].is_array());
  CHECK(j["sunflower_core"].empty());

  const Json bad = classification_to_json(
      classify_tensor(BitTensor(Shape({2, 2}), {{0, 0}, {0, 1}})));
  CHECK(bad["valid"] == false);
}

TEST_CASE("garbage input raises parse errors, never crashes") {
  std::mt19937_64 rng(7);
  const std::string alphabet = "{}[]\",:0123456789tshapeons-. ";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text;
    const int len = 1 + static_cast<int>(rng() % 40);
    for (int i = 0; i < len; ++i) text += alphabet[rng() % alphabet.size()];
    try {
      (void)tensor_from_string(text, "fuzz");
    } catch (const parse_error&) {
    }
  }
}

TEST_CASE("csv flattening") {
  Json j;
  j["value"] = 3;
  j["holds"] = true;
  j["cuts"] = std::vector<int>{1, 2};
  j["inner"]["num"] = 5;
  const std::string csv = report_to_csv(j);
  CHECK(csv == "key,value\nvalue,3\nholds,true\ncuts,1;2\ninner.num,5\n");
}
