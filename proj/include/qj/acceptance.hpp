#pragma once

// The acceptance suite, shared by the test binary and `qjac selftest`.

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace qj {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  /// Multiplies every sample count (rounded up, at least 1).
  double scale = 1.0;
  /// Criteria to run; empty means all.
  std::set<int> only;
  /// Also run criterion 0, a pass over the remaining library operations.
  bool coverage = false;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] 3 negation: ..." style line.
std::string format_result(const CriterionResult& r);

}  // namespace qj
