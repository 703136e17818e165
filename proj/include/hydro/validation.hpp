#pragma once

// The `validate` suite: physics and protocol ground-truth checks with
// measured values, independent of the benchmark path.

#include <string>
#include <vector>

namespace hydro {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;  // measured values, thresholds, or the failure story
};

// Riemann-solver self-tests: static state, Sod star values, and agreement
// of the two independent root-finders over randomized state pairs.
std::vector<CheckResult> check_riemann_solver();

// Sod tube at t=0.2 on 200 cells against the exact profile (L1 density).
CheckResult check_sod_profile();

// Blast conservation + fourfold symmetry over 100 audited steps.
std::vector<CheckResult> check_conservation();

// Every strategy against the sequential oracle, bitwise.
std::vector<CheckResult> check_strategy_equivalence();

// The full suite in the order above.
std::vector<CheckResult> run_validation_suite();

}  // namespace hydro
