#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tenpat/core.hpp"

namespace tenpat {

// Core of a sunflower pattern: the axes on which all 1-entries agree,
// together with the shared value per axis. Axes are kept sorted.
struct SunflowerSpec {
  std::vector<int> axes;
  std::vector<int> values;

  bool operator==(const SunflowerSpec& other) const = default;
};

struct PatternClass {
  bool valid = false;
  bool free = false;
  bool permutation = false;
  bool latin = false;
  std::optional<SunflowerSpec> sunflower;
  std::vector<std::string> diagnostics;
};

// True iff any two distinct 1-coordinates differ in at least two positions.
bool validate_pattern(const BitTensor& m);

// Every slice has at most one 1 (equivalently: per axis, the 1-entries carry
// pairwise distinct indices).
bool is_free_tensor(const BitTensor& m);

// Exactly one 1 per slice; false (never an error) for non-cubic input.
bool is_permutation_tensor(const BitTensor& m);

// Recursive Latin check: permutation matrix at t=2, every slice Latin above.
// Cubic with exactly n^(t-1) ones is checked first as a fast necessary
// condition. Non-cubic input yields false.
bool is_latin(const BitTensor& m);

// The inclusion-minimal sunflower core, or nullopt if the forced core fails
// the agreement condition. Patterns with fewer than two 1-entries get the
// empty core.
std::optional<SunflowerSpec> sunflower_core(const BitTensor& m);

// Total classification; never throws on a well-formed tensor.
PatternClass classify_tensor(const BitTensor& m);

// A validated t-pattern with cached classification.
class Pattern {
 public:
  explicit Pattern(BitTensor tensor);

  const BitTensor& tensor() const { return tensor_; }
  const Shape& shape() const { return tensor_.shape(); }
  int t() const { return tensor_.t(); }
  bool is_free() const { return cls_.free; }
  bool is_permutation() const { return cls_.permutation; }
  bool is_latin() const { return cls_.latin; }
  const std::optional<SunflowerSpec>& sunflower() const { return cls_.sunflower; }
  const PatternClass& classification() const { return cls_; }

 private:
  BitTensor tensor_;
  PatternClass cls_;
};

// k x ... x k pattern with ones on the main diagonal; a t-dimensional
// permutation.
Pattern make_identity(int t, int k);

// Ones at all coordinates summing to 0 mod n; an order-n t-dimensional Latin
// matrix.
BitTensor make_cyclic_latin(int n, int t);

// Sunflower with the requested core and diagonally placed petals. Requires
// petal_count <= every non-core axis length and, for two or more petals, at
// least two non-core axes (otherwise the result would not be a t-pattern).
Pattern make_sunflower(int t, const SunflowerSpec& core, int petal_count, const Shape& dims);

}  // namespace tenpat
