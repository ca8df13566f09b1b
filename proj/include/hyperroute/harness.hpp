#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyperroute/io.hpp"

namespace hyperroute {

/// One experiment per published table; fully determined by (id, overrides,
/// seed).
struct ExperimentConfig {
  std::string id;
  std::map<std::string, std::string> overrides;
  std::uint64_t seed = 1;
  int trials = 0;  // 0 means the experiment's default
  std::string format = "csv";
  std::string out_path;  // empty = stdout only
};

std::vector<std::string> experiment_ids();

/// Runs the experiment and (if out_path set) writes the rendered table.
Table run_experiment(const ExperimentConfig& config);

struct DecisionReport {
  std::string strategy;
  std::string depth_formula;
  double predicted_depth = 0.0;
  bool entanglement_advice = false;
  bool hybrid_advice = false;
  std::vector<std::string> notes;
};

/// Architectural decision table keyed on per-step capacity k0 and routing
/// rounds R.
DecisionReport recommend(double k0, int rounds, int num_vertices, bool pi_known);

struct CheckResult {
  std::string id;
  std::string name;
  std::string detail;
  bool pass = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  long long greedy_steps_checked = 0;  // monotonicity counter
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// The acceptance suite: one check per published criterion, every tolerance
/// pinned in code. `tamper` flips one expectation (a negative control used
/// by the tests to exercise the failure path). A non-empty `only` list
/// restricts the run to the named check ids.
VerifyReport verify_all(std::uint64_t seed, bool tamper = false,
                        const std::vector<std::string>& only = {});

std::string render_verify_report(const VerifyReport& report);

}  // namespace hyperroute
