// Benchmark comparing the OpenMP kernels against their serial reference
// implementations. Each workload runs both paths, checks that the results
// agree, and prints a timing table.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tenpat/division.hpp"
#include "tenpat/extremal.hpp"
#include "tenpat/pattern.hpp"
#include "tenpat/properties.hpp"

using namespace tenpat;

namespace {

double seconds(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double serial_s, double parallel_s, bool equal) {
  std::printf("%-34s %9.3fs %9.3fs %7.2fx  %s\n", name.c_str(), serial_s, parallel_s,
              parallel_s > 0 ? serial_s / parallel_s : 0.0, equal ? "results equal" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int threads = 0;  // all hardware threads
  if (argc > 1) threads = std::atoi(argv[1]);
#ifdef _OPENMP
  std::printf("OpenMP enabled, %d thread(s) for the parallel runs\n",
              threads == 0 ? omp_get_max_threads() : threads);
#else
  std::printf("built without OpenMP; parallel runs fall back to serial\n");
#endif
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

  int mismatches = 0;

  {
    const Pattern id2 = make_identity(2, 2);
    std::uint64_t serial_count = 0, parallel_count = 0;
    const double ts = seconds([&] { serial_count = count_avoiders_serial(4, id2, 2); });
    const double tp = seconds([&] { parallel_count = count_avoiders(4, id2, 2, threads); });
    const bool ok = serial_count == parallel_count;
    mismatches += !ok;
    row("count_avoiders n=4 t=2", ts, tp, ok);
  }

  {
    const Pattern id2 = make_identity(2, 2);
    SearchReport serial_report, parallel_report;
    const double ts = seconds([&] { serial_report = f_exact_serial(5, id2, 2); });
    const double tp =
        seconds([&] { parallel_report = f_exact(5, id2, 2, kDefaultSearchBudget, threads); });
    const bool ok = serial_report.value == parallel_report.value && serial_report.exact &&
                    parallel_report.exact;
    mismatches += !ok;
    row("f_exact n=5 t=2", ts, tp, ok);
  }

  {
    std::uint64_t serial_count = 0, parallel_count = 0;
    const double ts = seconds([&] { serial_count = latin_count_serial(4, 3); });
    const double tp = seconds([&] { parallel_count = latin_count(4, 3, threads); });
    const bool ok = serial_count == parallel_count;
    mismatches += !ok;
    row("latin_count n=4 t=3", ts, tp, ok);
  }

  {
    const Pattern id3 = make_identity(3, 2);
    std::uint64_t serial_count = 0, parallel_count = 0;
    const double ts = seconds([&] { serial_count = latin_count_avoiders_serial(4, 3, id3); });
    const double tp =
        seconds([&] { parallel_count = latin_count_avoiders(4, 3, id3, threads); });
    const bool ok = serial_count == parallel_count;
    mismatches += !ok;
    row("latin_count_avoiders n=4 t=3", ts, tp, ok);
  }

  {
    // Seeded dense-ish matrix large enough for a six-digit division space.
    std::mt19937_64 rng(7);
    std::vector<Coord> ones;
    for (int i = 0; i < 16; ++i) {
      for (int j = 0; j < 16; ++j) {
        if (rng() % 100 < 55) ones.push_back({i, j});
      }
    }
    const BitTensor m(Shape({16, 16}), ones);
    std::optional<Division> serial_found, parallel_found;
    const double ts = seconds([&] { serial_found = find_full_division_serial(m, 4); });
    const double tp = seconds([&] { parallel_found = find_full_division(m, 4, threads); });
    const bool ok = serial_found.has_value() == parallel_found.has_value() &&
                    (!serial_found || serial_found->cuts == parallel_found->cuts);
    mismatches += !ok;
    row("find_full_division 16x16 k=4", ts, tp, ok);
  }

  {
    SuiteConfig serial_cfg, parallel_cfg;
    serial_cfg.threads = 1;
    parallel_cfg.threads = threads == 0 ? 0 : threads;
    PropertyResult serial_res, parallel_res;
    const double ts =
        seconds([&] { serial_res = checks::shadow_theorem_sweep(serial_cfg, 20000); });
    const double tp =
        seconds([&] { parallel_res = checks::shadow_theorem_sweep(parallel_cfg, 20000); });
    const bool ok = serial_res.pass == parallel_res.pass && serial_res.cases == parallel_res.cases;
    mismatches += !ok;
    row("shadow sweep 20000 tensors", ts, tp, ok);
  }

  if (mismatches > 0) {
    std::printf("%d kernel(s) disagreed between serial and parallel runs\n", mismatches);
    return 1;
  }
  return 0;
}
