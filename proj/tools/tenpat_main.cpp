// tenpat: pattern avoidance in t-dimensional 0-1 matrices.
//
// Subcommands: classify, contains, divisions, shadow, extremal, count,
// klazar, alpha, latin, verify-suite. All reports are JSON by default
// (--format csv flattens them); tensors travel in the documented JSON
// format. Exit codes: 0 success, 1 property violation found by
// verify-suite, 2 usage or input error, 3 resource cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tenpat/alpha.hpp"
#include "tenpat/containment.hpp"
#include "tenpat/division.hpp"
#include "tenpat/errors.hpp"
#include "tenpat/extremal.hpp"
#include "tenpat/io.hpp"
#include "tenpat/pattern.hpp"
#include "tenpat/properties.hpp"
#include "tenpat/shadow.hpp"

using namespace tenpat;

namespace {

struct Common {
  std::string format = "json";
  int threads = 1;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t cap_cells = kDefaultCellCap;
  std::string output;
};

std::uint64_t env_cap_default() {
  if (const char* env = std::getenv("TENSOR_EXTREMAL_CAP_CELLS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring unparsable TENSOR_EXTREMAL_CAP_CELLS=\"" << env << "\"\n";
  }
  return kDefaultCellCap;
}

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--threads", common.threads,
                  "Worker threads (1 = serial reference, 0 = all hardware threads)")
      ->capture_default_str();
  cmd->add_option("--seed,-s", common.seed, "Seed for randomized property sweeps")
      ->capture_default_str();
  cmd->add_option("--cap-cells", common.cap_cells,
                  "Enumeration cap in cells (default also via TENSOR_EXTREMAL_CAP_CELLS)");
  cmd->add_option("--output,-o", common.output, "Write the report to a file instead of stdout");
}

void emit(const Common& common, const Json& report) {
  std::string text =
      common.format == "csv" ? report_to_csv(report) : report.dump(2) + "\n";
  if (common.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(common.output);
    if (!out) throw argument_error("cannot open output file " + common.output);
    out << text;
  }
}

int run(int argc, char** argv) {
  CLI::App app{"pattern avoidance in t-dimensional 0-1 matrices"};
  app.require_subcommand(1);

  // classify
  auto* classify = app.add_subcommand("classify", "Validate and classify a t-pattern");
  Common classify_common;
  classify_common.cap_cells = env_cap_default();
  std::string classify_input;
  classify->add_option("--input,-i,--matrix", classify_input, "Tensor JSON file")->required();
  add_common(classify, classify_common);
  classify->callback([&] {
    emit(classify_common, classification_to_json(classify_tensor(tensor_from_file(classify_input))));
  });

  // contains
  auto* contains = app.add_subcommand("contains", "Decide containment and print a witness");
  Common contains_common;
  std::string contains_matrix, contains_pattern;
  std::uint64_t contains_budget = kDefaultContainmentBudget;
  contains->add_option("--matrix,-i,--input", contains_matrix, "Matrix JSON file")->required();
  contains->add_option("--pattern,-p", contains_pattern, "Pattern JSON file")->required();
  contains->add_option("--budget", contains_budget, "Search node budget")->capture_default_str();
  add_common(contains, contains_common);
  contains->callback([&] {
    const BitTensor m = tensor_from_file(contains_matrix);
    const Pattern p(tensor_from_file(contains_pattern));
    const ContainmentResult result = find_embedding(m, p, contains_budget);
    Json report;
    report["contains"] = result.embedding.has_value();
    report["witness"] = result.embedding ? embedding_to_json(*result.embedding) : Json(nullptr);
    report["nodes"] = result.nodes;
    emit(contains_common, report);
  });

  // divisions
  auto* divisions = app.add_subcommand("divisions", "Count k-divisions, optionally find a full one");
  Common divisions_common;
  std::string divisions_matrix;
  int divisions_k = 2;
  bool divisions_find_full = false;
  divisions->add_option("--matrix,-i,--input", divisions_matrix, "Matrix JSON file")->required();
  divisions->add_option("--k", divisions_k, "Intervals per axis")->required();
  divisions->add_flag("--find-full", divisions_find_full, "Search for a full division");
  add_common(divisions, divisions_common);
  divisions->callback([&] {
    const BitTensor m = tensor_from_file(divisions_matrix);
    BigInt count = 1;
    for (int r = 0; r < m.t(); ++r) {
      if (divisions_k < 1 || divisions_k > m.shape().dims[r]) {
        throw argument_error("k=" + std::to_string(divisions_k) + " out of range for axis " +
                             std::to_string(r));
      }
      count *= binomial(static_cast<unsigned long>(m.shape().dims[r] - 1),
                        static_cast<unsigned long>(divisions_k - 1));
    }
    Json report;
    report["count"] = big_to_json(count);
    if (divisions_find_full) {
      const auto found = find_full_division(m, divisions_k, divisions_common.threads);
      report["full_found"] = found.has_value();
      report["division"] = found ? Json(found->cuts) : Json(nullptr);
    } else {
      report["full_found"] = nullptr;
      report["division"] = nullptr;
    }
    emit(divisions_common, report);
  });

  // shadow
  auto* shadow_cmd = app.add_subcommand("shadow", "Face counts and shadow bounds");
  Common shadow_common;
  std::string shadow_matrix;
  std::vector<std::string> shadow_cascade;
  shadow_cmd->add_option("--matrix,-i,--input", shadow_matrix, "Matrix JSON file");
  shadow_cmd
      ->add_option("--cascade", shadow_cascade,
                   "M K T: cascade representation and shadow bound of the integer M")
      ->expected(3);
  add_common(shadow_cmd, shadow_common);
  shadow_cmd->callback([&] {
    Json report;
    if (!shadow_cascade.empty()) {
      const BigInt m(shadow_cascade[0]);
      const int k = std::stoi(shadow_cascade[1]);
      const int t = std::stoi(shadow_cascade[2]);
      const CascadeRep rep = cascade_representation(m, k, t);
      report = cascade_to_json(rep);
      report["bound"] = big_to_json(shadow_upper_bound(rep));
    } else if (!shadow_matrix.empty()) {
      const BitTensor m = tensor_from_file(shadow_matrix);
      report["face_counts"] = face_counts_to_json(face_counts(m));
      report["corollary_holds"] =
          m.t() >= 3 ? Json(corollary_entry_bound(m).holds) : Json(nullptr);
    } else {
      throw argument_error("shadow needs --matrix or --cascade");
    }
    emit(shadow_common, report);
  });

  // extremal
  auto* extremal = app.add_subcommand("extremal", "Exact extremal search f_t(n, P)");
  Common extremal_common;
  extremal_common.cap_cells = env_cap_default();
  std::string extremal_pattern;
  int extremal_n = 1;
  std::uint64_t extremal_budget = kDefaultSearchBudget;
  extremal->add_option("--n", extremal_n, "Axis length")->required();
  extremal->add_option("--pattern,-p", extremal_pattern, "Pattern JSON file")->required();
  extremal->add_option("--budget", extremal_budget, "Branch-and-bound node budget");
  add_common(extremal, extremal_common);
  extremal->callback([&] {
    const Pattern p(tensor_from_file(extremal_pattern));
    const SearchReport report = f_exact(extremal_n, p, p.t(), extremal_budget,
                                        extremal_common.threads, extremal_common.cap_cells);
    emit(extremal_common, search_report_to_json(report));
  });

  // count
  auto* count = app.add_subcommand("count", "Count avoiders |T_t(n, P)|");
  Common count_common;
  count_common.cap_cells = env_cap_default();
  std::string count_pattern;
  int count_n = 1;
  count->add_option("--n", count_n, "Axis length")->required();
  count->add_option("--pattern,-p", count_pattern, "Pattern JSON file")->required();
  add_common(count, count_common);
  count->callback([&] {
    const Pattern p(tensor_from_file(count_pattern));
    Json report;
    report["count"] = count_avoiders(count_n, p, p.t(), count_common.threads,
                                     count_common.cap_cells);
    emit(count_common, report);
  });

  // klazar
  auto* klazar = app.add_subcommand("klazar", "Check the doubling inequality at n");
  Common klazar_common;
  klazar_common.cap_cells = env_cap_default();
  std::string klazar_pattern;
  int klazar_n = 1;
  klazar->add_option("--n", klazar_n, "Axis length")->required();
  klazar->add_option("--pattern,-p", klazar_pattern, "Pattern JSON file")->required();
  add_common(klazar, klazar_common);
  klazar->callback([&] {
    const Pattern p(tensor_from_file(klazar_pattern));
    const KlazarCheck check =
        klazar_check(klazar_n, p, p.t(), klazar_common.threads, klazar_common.cap_cells);
    Json report;
    report["lhs"] = big_to_json(check.lhs);
    report["rhs"] = big_to_json(check.rhs);
    report["holds"] = check.holds;
    report["f"] = check.f_value;
    report["avoiders_n"] = check.avoiders_n;
    emit(klazar_common, report);
  });

  // alpha
  auto* alpha_cmd = app.add_subcommand("alpha", "Evaluate the alpha_t(k) constant exactly");
  Common alpha_common;
  int alpha_t = 2, alpha_k = 2;
  alpha_cmd->add_option("--t", alpha_t, "Dimension")->required();
  alpha_cmd->add_option("--k", alpha_k, "Pattern side")->required();
  add_common(alpha_cmd, alpha_common);
  alpha_cmd->callback([&] {
    const BigRat value = alpha(alpha_t, alpha_k);
    Json report;
    report["t"] = alpha_t;
    report["k"] = alpha_k;
    report["alpha"] = rat_to_json(value);
    report["approx"] = to_double(value);
    const auto coeff = recursion_coefficient_report(alpha_t);
    Json jc;
    jc["symbolic"] = coeff.symbolic;
    jc["exponent"] = std::to_string(coeff.exponent_num) + "/" + std::to_string(coeff.exponent_den);
    jc["exceeds_half"] = coeff.exceeds_half;
    report["recursion_coefficient"] = jc;
    emit(alpha_common, report);
  });

  // latin
  auto* latin = app.add_subcommand("latin", "Enumerate Latin matrices, optionally filtered");
  Common latin_common;
  std::string latin_pattern;
  int latin_n = 1, latin_t = 3;
  bool latin_override = false;
  latin->add_option("--n", latin_n, "Order")->required();
  latin->add_option("--t", latin_t, "Dimension")->capture_default_str();
  latin->add_option("--pattern,-p", latin_pattern, "Pattern JSON file (count avoiders)");
  latin->add_flag("--override-reach", latin_override,
                  "Lift the (t, n) enumeration reach table");
  add_common(latin, latin_common);
  latin->callback([&] {
    if (latin_override) {
      std::cerr << "warning: enumeration reach table overridden; the run may take very long\n";
    }
    Json report;
    report["total"] = latin_count(latin_n, latin_t, latin_common.threads, latin_override);
    if (!latin_pattern.empty()) {
      const Pattern p(tensor_from_file(latin_pattern));
      report["avoiders"] =
          latin_count_avoiders(latin_n, latin_t, p, latin_common.threads, latin_override);
    }
    emit(latin_common, report);
  });

  // verify-suite
  auto* verify = app.add_subcommand("verify-suite", "Run every module invariant at desk scale");
  Common verify_common;
  verify_common.cap_cells = env_cap_default();
  bool inject_flip = false;
  verify->add_flag("--inject-shadow-flip", inject_flip,
                   "Self-test: invert the shadow bound to prove failures are caught")
      ->group("");  // hidden
  add_common(verify, verify_common);
  verify->callback([&] {
    SuiteConfig cfg;
    cfg.seed = verify_common.seed;
    cfg.threads = verify_common.threads;
    cfg.cap_cells = verify_common.cap_cells;
    cfg.flip_shadow_bound = inject_flip;
    Json rows = Json::array();
    int failed = 0;
    for (const Property& prop : property_suite()) {
      const PropertyResult r = prop.run(cfg);
      Json row;
      row["property"] = r.name;
      row["pass"] = r.pass;
      row["cases"] = r.cases;
      if (r.nonvacuous > 0) row["nonvacuous"] = r.nonvacuous;
      if (!r.detail.empty()) row["detail"] = r.detail;
      if (!r.pass) {
        ++failed;
        if (r.counterexample) {
          std::string name = r.name;
          for (char& c : name) {
            if (c == '.') c = '_';
          }
          const std::string base = "tenpat-counterexample-" + name;
          std::ofstream out(base + ".json");
          out << *r.counterexample << "\n";
          row["counterexample_file"] = base + ".json";
          // Embedded tensors also land in standalone files so the failure
          // replays directly through --matrix / --pattern.
          const Json ce = Json::parse(*r.counterexample);
          for (const char* key : {"matrix", "pattern"}) {
            if (ce.contains(key) && ce.at(key).is_object()) {
              const std::string path = base + "-" + key + ".json";
              std::ofstream tensor_out(path);
              tensor_out << ce.at(key).dump(2) << "\n";
              row[std::string(key) + "_file"] = path;
            }
          }
        }
      }
      rows.push_back(std::move(row));
    }
    Json report;
    report["seed"] = cfg.seed;
    report["threads"] = cfg.threads;
    report["properties"] = std::move(rows);
    report["total"] = property_suite().size();
    report["failed"] = failed;
    emit(verify_common, report);
    if (failed > 0) std::exit(1);
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const argument_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
