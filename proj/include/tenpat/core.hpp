#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tenpat {

// Axis lengths (n_1, ..., n_t) of a t-dimensional 0-1 matrix. t >= 1 and
// every axis length is positive. Indexing everywhere in the library is
// zero-based; input and output formats are zero-based as well.
struct Shape {
  std::vector<int> dims;

  Shape() = default;
  explicit Shape(std::vector<int> d);

  int t() const { return static_cast<int>(dims.size()); }
  std::uint64_t cells() const;
  bool cubic() const;
  // Common axis length of a cubic shape.
  int side() const;
  Shape without_axis(int axis) const;

  bool operator==(const Shape& other) const = default;
};

// Zero-based entry position; length always matches the ambient Shape's t.
using Coord = std::vector<int>;

constexpr std::uint64_t kDenseCellLimit = std::uint64_t{1} << 16;
constexpr std::uint64_t kDefaultCellCap = 25;

// A t-dimensional 0-1 matrix stored as its sorted, duplicate-free list of
// 1-coordinates. Shapes with at most kDenseCellLimit cells additionally keep
// a packed bitset so membership tests are O(1). Instances never mutate after
// construction and are safe to share across threads.
class BitTensor {
 public:
  BitTensor() = default;
  // Canonicalizes (sorts, deduplicates) and validates bounds; an
  // out-of-range coordinate raises argument_error naming it and its axis.
  BitTensor(Shape shape, std::vector<Coord> ones);

  static BitTensor zeros(Shape shape);
  static BitTensor full(Shape shape);
  // Decodes a cell subset from the bits of `code`: cell i (in row-major
  // order) is a 1 iff bit (cells-1-i) is set, so ascending codes enumerate
  // tensors in lexicographic order of their bit representation. Requires
  // cells <= 63.
  static BitTensor from_code(const Shape& shape, std::uint64_t code);

  const Shape& shape() const { return shape_; }
  int t() const { return shape_.t(); }
  const std::vector<Coord>& ones() const { return ones_; }
  std::uint64_t ones_count() const { return ones_.size(); }

  bool has(const Coord& c) const;
  std::uint64_t linear_index(const Coord& c) const;

  bool operator==(const BitTensor& other) const {
    return shape_ == other.shape_ && ones_ == other.ones_;
  }
  // Lexicographic on (dims, ones); used for deterministic tie-breaking.
  bool operator<(const BitTensor& other) const;

  std::string describe() const;

 private:
  struct sorted_tag {};
  BitTensor(sorted_tag, Shape shape, std::vector<Coord> ones);
  void build_dense();

  Shape shape_;
  std::vector<Coord> ones_;
  std::vector<std::uint64_t> bits_;  // dense form, empty above kDenseCellLimit
};

// The (axis, index)-slice: fix `axis` to `index` and delete that axis.
// Requires t >= 2.
BitTensor slice(const BitTensor& m, int axis, int index);

// The axis-th smash: (t-1)-dimensional projection recording which fibers
// along `axis` contain a 1. Requires t >= 2.
BitTensor smash(const BitTensor& m, int axis);

// Submatrix extraction: one strictly increasing, non-empty index list per
// axis.
BitTensor subtensor(const BitTensor& m, const std::vector<std::vector<int>>& selections);

// Remove the (axis, index)-hyperplane, shrinking that axis by one. Requires
// dims[axis] >= 2.
BitTensor delete_hyperplane(const BitTensor& m, int axis, int index);

// Visits all 2^cells tensors of the shape in ascending code order. Refuses
// shapes above cap_cells with a resource_error that names --cap-cells.
void for_each_tensor(const Shape& shape, const std::function<void(const BitTensor&)>& fn,
                     std::uint64_t cap_cells = kDefaultCellCap);

std::string coord_to_string(const Coord& c);

}  // namespace tenpat
