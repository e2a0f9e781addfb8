#pragma once

#include <string>
#include <vector>

#include "fourg/report.hpp"

namespace fourg {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::string detail;  // first failure
};

// Invariant suites at genus g: group axioms, braid invariance, kernel genus
// integrality, Harnack, centralizer containment, oval class functions,
// guard identities, sign cross-check, and 1 vs N worker reproducibility.
std::vector<CheckResult> run_checks(int g, const ReportOptions& options = {});
Json checks_json(const std::vector<CheckResult>& results);

} // namespace fourg
