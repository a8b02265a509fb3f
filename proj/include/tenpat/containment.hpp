#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tenpat/core.hpp"
#include "tenpat/pattern.hpp"

namespace tenpat {

// A witness that M contains P: one strictly increasing index list per axis,
// sized to P's dimensions, whose subtensor dominates P entrywise.
struct Embedding {
  std::vector<std::vector<int>> selections;
};

struct ContainmentResult {
  std::optional<Embedding> embedding;
  std::uint64_t nodes = 0;
};

constexpr std::uint64_t kDefaultContainmentBudget = 50'000'000;

// Depth-first search over P's 1-entries in lexicographic order, extending
// per-axis monotone index maps; when containment holds, the witness is
// re-derived as the lexicographically least selections tuple. Exceeding the
// node budget raises resource_error ("unknown" is never reported as false).
ContainmentResult find_embedding(const BitTensor& m, const Pattern& p,
                                 std::uint64_t node_budget = kDefaultContainmentBudget);

bool avoids(const BitTensor& m, const Pattern& p,
            std::uint64_t node_budget = kDefaultContainmentBudget);

// Entrywise domination on equal shapes.
bool dominates(const BitTensor& big, const BitTensor& small);

}  // namespace tenpat
