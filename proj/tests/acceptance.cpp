// Acceptance suite: one pass/fail line per criterion, non-zero exit when any
// fails. Scales and tolerances are pinned here; the checkers live in the
// library's property module so the verify-suite subcommand exercises the
// same code.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "tenpat/alpha.hpp"
#include "tenpat/properties.hpp"

using namespace tenpat;

namespace {

int failures = 0;

template <typename Fn>
void run(int id, const std::string& what, double limit_s, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<PropertyResult> results = fn();
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool pass = true;
  std::uint64_t cases = 0;
  std::string why;
  for (const PropertyResult& r : results) {
    cases += r.cases;
    if (!r.pass) {
      pass = false;
      if (why.empty()) why = r.name + ": " + r.detail;
    }
  }
  if (limit_s > 0 && elapsed >= limit_s) {
    pass = false;
    why = "runtime " + std::to_string(elapsed) + "s exceeds " + std::to_string(limit_s) + "s";
  }
  if (!pass) ++failures;
  std::printf("criterion %d [%s] %s (%llu checks, %.1fs)%s%s\n", id, pass ? "pass" : "FAIL",
              what.c_str(), static_cast<unsigned long long>(cases), elapsed,
              why.empty() ? "" : " -- ", why.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  SuiteConfig cfg;
  cfg.threads = 0;  // all hardware threads

  run(1, "containment agrees with selection enumeration (full 2x2 and 2x2x2 sweeps, 10000 seeded pairs)",
      300.0, [&] {
        return std::vector<PropertyResult>{checks::containment_oracle_equivalence(cfg, 10000)};
      });

  run(2, "f(n, 2x2 identity) = 2n-1 for n=1..5 with valid witnesses", 120.0, [&] {
    return std::vector<PropertyResult>{checks::extremal_staircase(cfg, 5)};
  });

  run(3, "Klazar doubling inequality and block-contraction map on all small patterns", 0.0, [&] {
    return std::vector<PropertyResult>{checks::extremal_klazar(cfg)};
  });

  run(4, "shadow machinery: Turan binomials, cascade uniqueness, shadow and entry bounds", 600.0,
      [&] {
        return std::vector<PropertyResult>{
            checks::shadow_turan_vs_cliques(cfg, 12, 4),
            checks::shadow_cascade_unique(cfg, 500, 4),
            checks::shadow_theorem_sweep(cfg, 10000),
            checks::shadow_corollary_sweep(cfg, 10000),
        };
      });

  run(5, "division counting, full-division soundness, full division forces containment", 0.0,
      [&] {
        return std::vector<PropertyResult>{
            checks::division_count_vs_enumeration(cfg),
            checks::division_full_soundness(cfg),
            checks::containment_full_division_link(cfg, 1000),
        };
      });

  run(6, "pigeonhole lemma on 1000 seeded block families", 0.0, [&] {
    return std::vector<PropertyResult>{checks::division_pigeonhole(cfg, 1000)};
  });

  run(7, "latin enumeration counts 1, 2, 12, 576 vs the independent enumerator", 300.0, [&] {
    return std::vector<PropertyResult>{checks::extremal_latin_counts(cfg)};
  });

  run(8, "alpha constants and the recursion-coefficient report", 0.0, [&] {
    for (int t : {3, 4}) {
      const auto r = recursion_coefficient_report(t);
      std::printf("  recursion coefficient at t=%d: %s%s\n", t, r.symbolic.c_str(),
                  r.exceeds_half ? " (exceeds 1/2; the halving step is not justified as printed)"
                                 : "");
    }
    return std::vector<PropertyResult>{checks::extremal_alpha_constants(cfg)};
  });

  run(9, "sunflower slice reduction f_t(n,P) <= n f_{t-1}(n,P') on all small cores", 0.0, [&] {
    return std::vector<PropertyResult>{checks::extremal_sunflower_reduction(cfg)};
  });

  if (failures == 0) {
    std::printf("acceptance: all 9 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
