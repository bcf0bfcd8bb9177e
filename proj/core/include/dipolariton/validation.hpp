#pragma once

#include "dipolariton/config.hpp"

#include <string>
#include <vector>

namespace dipolariton {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Model-level invariants evaluated on a configuration: normalization and sum
/// rules over its sweep, coupling-sign gauge equivalence, the Jaynes-Cummings
/// and tunneling anticrossing limits, and resonance location.
std::vector<CheckResult> run_invariant_checks(const Config& config);

}  // namespace dipolariton
