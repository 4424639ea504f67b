#pragma once

#include <string>
#include <vector>

namespace enriques {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the theorem-backed invariant suites of every module with a fixed
/// seed; deterministic across runs.
std::vector<CheckResult> run_selftest();

}  // namespace enriques
