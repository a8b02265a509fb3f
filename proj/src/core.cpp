#include "tenpat/core.hpp"

#include <algorithm>
#include <sstream>

#include "tenpat/errors.hpp"

namespace tenpat {

Shape::Shape(std::vector<int> d) : dims(std::move(d)) {
  if (dims.empty()) throw argument_error("shape must have at least one axis");
  for (std::size_t r = 0; r < dims.size(); ++r) {
    if (dims[r] < 1) {
      throw argument_error("shape axis " + std::to_string(r) + " has non-positive length " +
                           std::to_string(dims[r]));
    }
  }
}

std::uint64_t Shape::cells() const {
  std::uint64_t prod = 1;
  for (int d : dims) {
    std::uint64_t next = prod * static_cast<std::uint64_t>(d);
    if (d != 0 && next / static_cast<std::uint64_t>(d) != prod) {
      throw argument_error("shape cell count overflows 64 bits");
    }
    prod = next;
  }
  return prod;
}

bool Shape::cubic() const {
  for (int d : dims) {
    if (d != dims[0]) return false;
  }
  return true;
}

int Shape::side() const {
  if (!cubic()) throw argument_error("side() requires a cubic shape");
  return dims[0];
}

Shape Shape::without_axis(int axis) const {
  if (axis < 0 || axis >= t()) {
    throw argument_error("axis " + std::to_string(axis) + " out of range for t=" +
                         std::to_string(t()));
  }
  if (t() == 1) throw argument_error("cannot drop the only axis of a 1-dimensional shape");
  std::vector<int> d = dims;
  d.erase(d.begin() + axis);
  return Shape(std::move(d));
}

std::string coord_to_string(const Coord& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ')';
  return os.str();
}

BitTensor::BitTensor(Shape shape, std::vector<Coord> ones)
    : shape_(std::move(shape)), ones_(std::move(ones)) {
  const int t = shape_.t();
  for (const Coord& c : ones_) {
    if (static_cast<int>(c.size()) != t) {
      throw argument_error("coordinate " + coord_to_string(c) + " has " +
                           std::to_string(c.size()) + " indices, expected " + std::to_string(t));
    }
    for (int r = 0; r < t; ++r) {
      if (c[r] < 0 || c[r] >= shape_.dims[r]) {
        throw argument_error("coordinate " + coord_to_string(c) + " out of bounds on axis " +
                             std::to_string(r) + " (axis length " +
                             std::to_string(shape_.dims[r]) + ")");
      }
    }
  }
  std::sort(ones_.begin(), ones_.end());
  ones_.erase(std::unique(ones_.begin(), ones_.end()), ones_.end());
  build_dense();
}

BitTensor::BitTensor(sorted_tag, Shape shape, std::vector<Coord> ones)
    : shape_(std::move(shape)), ones_(std::move(ones)) {
  build_dense();
}

void BitTensor::build_dense() {
  if (shape_.dims.empty()) return;
  // Saturating product: shapes too large for the dense form (including ones
  // whose cell count would not even fit 64 bits) just stay sparse.
  std::uint64_t n = 1;
  for (int d : shape_.dims) {
    n *= static_cast<std::uint64_t>(d);
    if (n > kDenseCellLimit) return;
  }
  bits_.assign((n + 63) / 64, 0);
  for (const Coord& c : ones_) {
    std::uint64_t idx = linear_index(c);
    bits_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
  }
}

BitTensor BitTensor::zeros(Shape shape) { return BitTensor(std::move(shape), {}); }

BitTensor BitTensor::full(Shape shape) {
  std::vector<Coord> all;
  const std::uint64_t n = shape.cells();
  all.reserve(n);
  Coord cur(shape.t(), 0);
  for (std::uint64_t i = 0; i < n; ++i) {
    all.push_back(cur);
    for (int r = shape.t() - 1; r >= 0; --r) {
      if (++cur[r] < shape.dims[r]) break;
      cur[r] = 0;
    }
  }
  return BitTensor(sorted_tag{}, std::move(shape), std::move(all));
}

BitTensor BitTensor::from_code(const Shape& shape, std::uint64_t code) {
  const std::uint64_t n = shape.cells();
  if (n > 63) throw argument_error("from_code requires at most 63 cells");
  std::vector<Coord> ones;
  Coord cur(shape.t(), 0);
  for (std::uint64_t i = 0; i < n; ++i) {
    if ((code >> (n - 1 - i)) & 1) ones.push_back(cur);
    for (int r = shape.t() - 1; r >= 0; --r) {
      if (++cur[r] < shape.dims[r]) break;
      cur[r] = 0;
    }
  }
  return BitTensor(sorted_tag{}, shape, std::move(ones));
}

std::uint64_t BitTensor::linear_index(const Coord& c) const {
  std::uint64_t idx = 0;
  for (int r = 0; r < shape_.t(); ++r) idx = idx * shape_.dims[r] + c[r];
  return idx;
}

bool BitTensor::has(const Coord& c) const {
  if (!bits_.empty()) {
    std::uint64_t idx = linear_index(c);
    return (bits_[idx >> 6] >> (idx & 63)) & 1;
  }
  return std::binary_search(ones_.begin(), ones_.end(), c);
}

bool BitTensor::operator<(const BitTensor& other) const {
  if (shape_.dims != other.shape_.dims) return shape_.dims < other.shape_.dims;
  return ones_ < other.ones_;
}

std::string BitTensor::describe() const {
  std::ostringstream os;
  os << "tensor ";
  for (std::size_t r = 0; r < shape_.dims.size(); ++r) {
    if (r) os << 'x';
    os << shape_.dims[r];
  }
  os << " with " << ones_.size() << " ones";
  return os.str();
}

static void check_axis(const BitTensor& m, int axis) {
  if (axis < 0 || axis >= m.t()) {
    throw argument_error("axis " + std::to_string(axis) + " out of range for t=" +
                         std::to_string(m.t()));
  }
}

BitTensor slice(const BitTensor& m, int axis, int index) {
  if (m.t() < 2) throw argument_error("slice requires t >= 2 (got t=1)");
  check_axis(m, axis);
  if (index < 0 || index >= m.shape().dims[axis]) {
    throw argument_error("slice index " + std::to_string(index) + " out of range on axis " +
                         std::to_string(axis));
  }
  std::vector<Coord> kept;
  for (const Coord& c : m.ones()) {
    if (c[axis] != index) continue;
    Coord reduced = c;
    reduced.erase(reduced.begin() + axis);
    kept.push_back(std::move(reduced));
  }
  return BitTensor(m.shape().without_axis(axis), std::move(kept));
}

BitTensor smash(const BitTensor& m, int axis) {
  if (m.t() < 2) throw argument_error("smash requires t >= 2 (got t=1)");
  check_axis(m, axis);
  std::vector<Coord> projected;
  projected.reserve(m.ones().size());
  for (const Coord& c : m.ones()) {
    Coord reduced = c;
    reduced.erase(reduced.begin() + axis);
    projected.push_back(std::move(reduced));
  }
  return BitTensor(m.shape().without_axis(axis), std::move(projected));
}

BitTensor subtensor(const BitTensor& m, const std::vector<std::vector<int>>& selections) {
  const int t = m.t();
  if (static_cast<int>(selections.size()) != t) {
    throw argument_error("expected " + std::to_string(t) + " selection lists, got " +
                         std::to_string(selections.size()));
  }
  std::vector<int> new_dims(t);
  for (int r = 0; r < t; ++r) {
    const auto& sel = selections[r];
    if (sel.empty()) throw argument_error("selection for axis " + std::to_string(r) + " is empty");
    for (std::size_t i = 0; i < sel.size(); ++i) {
      if (sel[i] < 0 || sel[i] >= m.shape().dims[r]) {
        throw argument_error("selection index " + std::to_string(sel[i]) +
                             " out of range on axis " + std::to_string(r));
      }
      if (i > 0 && sel[i] <= sel[i - 1]) {
        throw argument_error("selection for axis " + std::to_string(r) +
                             " is not strictly increasing");
      }
    }
    new_dims[r] = static_cast<int>(sel.size());
  }
  std::vector<Coord> mapped;
  Coord image(t);
  for (const Coord& c : m.ones()) {
    bool inside = true;
    for (int r = 0; r < t && inside; ++r) {
      const auto& sel = selections[r];
      auto it = std::lower_bound(sel.begin(), sel.end(), c[r]);
      if (it == sel.end() || *it != c[r]) {
        inside = false;
      } else {
        image[r] = static_cast<int>(it - sel.begin());
      }
    }
    if (inside) mapped.push_back(image);
  }
  return BitTensor(Shape(std::move(new_dims)), std::move(mapped));
}

BitTensor delete_hyperplane(const BitTensor& m, int axis, int index) {
  check_axis(m, axis);
  const int d = m.shape().dims[axis];
  if (d < 2) throw argument_error("cannot delete the only hyperplane of axis " + std::to_string(axis));
  if (index < 0 || index >= d) {
    throw argument_error("hyperplane index " + std::to_string(index) + " out of range on axis " +
                         std::to_string(axis));
  }
  std::vector<std::vector<int>> selections(m.t());
  for (int r = 0; r < m.t(); ++r) {
    for (int j = 0; j < m.shape().dims[r]; ++j) {
      if (r == axis && j == index) continue;
      selections[r].push_back(j);
    }
  }
  return subtensor(m, selections);
}

void for_each_tensor(const Shape& shape, const std::function<void(const BitTensor&)>& fn,
                     std::uint64_t cap_cells) {
  const std::uint64_t n = shape.cells();
  if (n > cap_cells) {
    throw resource_error("enumeration over " + std::to_string(n) +
                         " cells exceeds the cap of " + std::to_string(cap_cells) +
                         " (raise with --cap-cells or TENSOR_EXTREMAL_CAP_CELLS)");
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t code = 0; code < total; ++code) fn(BitTensor::from_code(shape, code));
}

}  // namespace tenpat
