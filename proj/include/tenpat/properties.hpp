#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tenpat/core.hpp"

namespace tenpat {

constexpr std::uint64_t kDefaultSeed = 1729;

struct SuiteConfig {
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
  std::uint64_t cap_cells = kDefaultCellCap;
  // Self-test hook: inverts the shadow-theorem comparison so the harness can
  // be seen to fail and emit a counterexample.
  bool flip_shadow_bound = false;
};

struct PropertyResult {
  std::string name;
  bool pass = true;
  std::uint64_t cases = 0;       // instances examined
  std::uint64_t nonvacuous = 0;  // instances where the hypothesis fired, when that differs
  std::string detail;
  std::optional<std::string> counterexample;  // serialized JSON, replayable

  void fail(std::string ce, std::string why) {
    pass = false;
    counterexample = std::move(ce);
    if (detail.empty()) detail = std::move(why);
  }
};

// Parameterized checkers, shared between the verify-suite runner (default
// desk scales) and the acceptance suite (criterion scales).
namespace checks {

PropertyResult core_slice_partition(const SuiteConfig& cfg);
PropertyResult core_smash_dominance(const SuiteConfig& cfg);
PropertyResult core_smash_of_slice(const SuiteConfig& cfg);
PropertyResult core_subtensor_monotonicity(const SuiteConfig& cfg);
PropertyResult core_round_trip(const SuiteConfig& cfg);

PropertyResult pattern_hierarchy(const SuiteConfig& cfg);
PropertyResult pattern_latin_structure(const SuiteConfig& cfg);
PropertyResult pattern_sunflower_agreement(const SuiteConfig& cfg);

PropertyResult containment_witness_soundness(const SuiteConfig& cfg);
PropertyResult containment_monotonicity(const SuiteConfig& cfg);
PropertyResult containment_oracle_equivalence(const SuiteConfig& cfg, std::uint64_t random_pairs);
PropertyResult containment_full_division_link(const SuiteConfig& cfg, std::uint64_t instances);

PropertyResult division_count_vs_enumeration(const SuiteConfig& cfg);
PropertyResult division_contraction_composition(const SuiteConfig& cfg);
PropertyResult division_full_soundness(const SuiteConfig& cfg);
PropertyResult division_theorem_full_desk(const SuiteConfig& cfg);
PropertyResult division_pigeonhole(const SuiteConfig& cfg, std::uint64_t families);

PropertyResult shadow_turan_vs_cliques(const SuiteConfig& cfg, int n_max, int t_max);
PropertyResult shadow_cascade_unique(const SuiteConfig& cfg, std::uint64_t m_max, int t_max);
PropertyResult shadow_theorem_sweep(const SuiteConfig& cfg, std::uint64_t random_tensors);
PropertyResult shadow_corollary_sweep(const SuiteConfig& cfg, std::uint64_t random_tensors);
PropertyResult shadow_degenerate_guard(const SuiteConfig& cfg);

PropertyResult extremal_staircase(const SuiteConfig& cfg, int n_max);
PropertyResult extremal_f_monotone(const SuiteConfig& cfg);
PropertyResult extremal_klazar(const SuiteConfig& cfg);
PropertyResult extremal_free_threshold(const SuiteConfig& cfg);
PropertyResult extremal_latin_counts(const SuiteConfig& cfg);
PropertyResult extremal_sunflower_reduction(const SuiteConfig& cfg);
PropertyResult extremal_alpha_constants(const SuiteConfig& cfg);

PropertyResult parallel_matches_serial(const SuiteConfig& cfg);
PropertyResult io_round_trip(const SuiteConfig& cfg);

}  // namespace checks

struct Property {
  std::string name;
  std::function<PropertyResult(const SuiteConfig&)> run;
};

// Every module's invariants at their default desk scale, in deterministic
// order.
const std::vector<Property>& property_suite();

}  // namespace tenpat
