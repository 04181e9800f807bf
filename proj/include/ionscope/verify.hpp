#pragma once

#include <string>
#include <vector>

namespace ionscope {

struct CheckResult {
  std::string name;
  bool pass = false;
  double max_abs_err = 0.0;
  double tolerance = 0.0;
};

/// Runs the full self-check battery: geometry properties, closed-form and
/// enumeration equivalences, pattern symmetries, sampling statistics and
/// inference invariants. `perturb` adds a constant offset to the closed-form
/// reference values; a nonzero value must make the equivalence checks fail
/// (negative control for the harness itself).
std::vector<CheckResult> run_verification(double perturb = 0.0);

}  // namespace ionscope
