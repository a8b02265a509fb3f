#include "tenpat/pattern.hpp"

#include <algorithm>
#include <set>

#include "tenpat/errors.hpp"
#include "tenpat/exact.hpp"

namespace tenpat {

bool validate_pattern(const BitTensor& m) {
  const auto& ones = m.ones();
  for (std::size_t i = 0; i < ones.size(); ++i) {
    for (std::size_t j = i + 1; j < ones.size(); ++j) {
      int diff = 0;
      for (int r = 0; r < m.t() && diff < 2; ++r) {
        if (ones[i][r] != ones[j][r]) ++diff;
      }
      if (diff < 2) return false;
    }
  }
  return true;
}

bool is_free_tensor(const BitTensor& m) {
  for (int r = 0; r < m.t(); ++r) {
    std::set<int> seen;
    for (const Coord& c : m.ones()) {
      if (!seen.insert(c[r]).second) return false;
    }
  }
  return true;
}

bool is_permutation_tensor(const BitTensor& m) {
  if (!m.shape().cubic()) return false;
  const int n = m.shape().side();
  if (m.ones_count() != static_cast<std::uint64_t>(n)) return false;
  return is_free_tensor(m);
}

static bool latin_ones_count_ok(const BitTensor& m) {
  const int n = m.shape().side();
  BigInt expected = big_pow(BigInt(n), static_cast<unsigned long>(m.t() - 1));
  return expected == BigInt(static_cast<unsigned long>(m.ones_count()));
}

bool is_latin(const BitTensor& m) {
  if (m.t() < 2) return false;
  if (!m.shape().cubic()) return false;
  if (!latin_ones_count_ok(m)) return false;
  if (m.t() == 2) return is_permutation_tensor(m);
  for (int r = 0; r < m.t(); ++r) {
    for (int j = 0; j < m.shape().dims[r]; ++j) {
      if (!is_latin(slice(m, r, j))) return false;
    }
  }
  return true;
}

std::optional<SunflowerSpec> sunflower_core(const BitTensor& m) {
  const auto& ones = m.ones();
  if (ones.size() < 2) return SunflowerSpec{};  // vacuous: minimal core is empty
  const int t = m.t();
  // Forced core: exactly the axes where some pair agrees.
  std::vector<bool> in_core(t, false);
  for (std::size_t i = 0; i < ones.size(); ++i) {
    for (std::size_t j = i + 1; j < ones.size(); ++j) {
      for (int r = 0; r < t; ++r) {
        if (ones[i][r] == ones[j][r]) in_core[r] = true;
      }
    }
  }
  SunflowerSpec spec;
  for (int r = 0; r < t; ++r) {
    if (!in_core[r]) continue;
    // All entries must share one value on a core axis.
    const int v = ones[0][r];
    for (const Coord& c : ones) {
      if (c[r] != v) return std::nullopt;
    }
    spec.axes.push_back(r);
    spec.values.push_back(v);
  }
  return spec;
}

PatternClass classify_tensor(const BitTensor& m) {
  PatternClass cls;
  cls.valid = validate_pattern(m);
  if (!cls.valid) {
    cls.diagnostics.push_back("two 1-entries differ in fewer than two positions");
    return cls;
  }
  cls.free = is_free_tensor(m);
  if (!m.shape().cubic()) {
    cls.diagnostics.push_back("permutation/Latin classification requires equal axis lengths");
  } else {
    cls.permutation = is_permutation_tensor(m);
    cls.latin = is_latin(m);
  }
  cls.sunflower = sunflower_core(m);
  return cls;
}

Pattern::Pattern(BitTensor tensor) : tensor_(std::move(tensor)) {
  cls_ = classify_tensor(tensor_);
  if (!cls_.valid) {
    throw argument_error("not a t-pattern: " + tensor_.describe() +
                         " has two 1-entries differing in fewer than two positions");
  }
}

Pattern make_identity(int t, int k) {
  if (t < 2) throw argument_error("make_identity requires t >= 2");
  if (k < 1) throw argument_error("make_identity requires k >= 1");
  std::vector<Coord> ones;
  ones.reserve(k);
  for (int i = 0; i < k; ++i) ones.emplace_back(t, i);
  return Pattern(BitTensor(Shape(std::vector<int>(t, k)), std::move(ones)));
}

BitTensor make_cyclic_latin(int n, int t) {
  if (n < 1) throw argument_error("make_cyclic_latin requires n >= 1");
  if (t < 2) throw argument_error("make_cyclic_latin requires t >= 2");
  Shape shape(std::vector<int>(t, n));
  std::vector<Coord> ones;
  Coord cur(t, 0);
  const std::uint64_t total = shape.cells();
  for (std::uint64_t i = 0; i < total; ++i) {
    int sum = 0;
    for (int v : cur) sum += v;
    if (sum % n == 0) ones.push_back(cur);
    for (int r = t - 1; r >= 0; --r) {
      if (++cur[r] < n) break;
      cur[r] = 0;
    }
  }
  return BitTensor(std::move(shape), std::move(ones));
}

Pattern make_sunflower(int t, const SunflowerSpec& core, int petal_count, const Shape& dims) {
  if (t < 2) throw argument_error("make_sunflower requires t >= 2");
  if (dims.t() != t) {
    throw argument_error("dims has " + std::to_string(dims.t()) + " axes, expected " +
                         std::to_string(t));
  }
  if (core.axes.size() != core.values.size()) {
    throw argument_error("core axes and values differ in length");
  }
  if (petal_count < 0) throw argument_error("petal_count must be non-negative");
  std::vector<int> core_value(t, -1);
  for (std::size_t i = 0; i < core.axes.size(); ++i) {
    const int s = core.axes[i];
    if (s < 0 || s >= t) throw argument_error("core axis " + std::to_string(s) + " out of range");
    if (core_value[s] != -1) throw argument_error("core axis " + std::to_string(s) + " repeated");
    if (core.values[i] < 0 || core.values[i] >= dims.dims[s]) {
      throw argument_error("core value " + std::to_string(core.values[i]) +
                           " out of range on axis " + std::to_string(s));
    }
    core_value[s] = core.values[i];
  }
  int non_core = 0;
  for (int r = 0; r < t; ++r) {
    if (core_value[r] == -1) {
      ++non_core;
      if (petal_count > dims.dims[r]) {
        throw argument_error("petal_count " + std::to_string(petal_count) +
                             " exceeds axis " + std::to_string(r) + " length " +
                             std::to_string(dims.dims[r]));
      }
    }
  }
  if (petal_count >= 2 && non_core < 2) {
    throw argument_error("a sunflower with " + std::to_string(petal_count) +
                         " petals needs at least two non-core axes to stay a t-pattern");
  }
  std::vector<Coord> ones;
  for (int j = 0; j < petal_count; ++j) {
    Coord c(t);
    for (int r = 0; r < t; ++r) c[r] = core_value[r] == -1 ? j : core_value[r];
    ones.push_back(std::move(c));
  }
  return Pattern(BitTensor(dims, std::move(ones)));
}

}  // namespace tenpat
