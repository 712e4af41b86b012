#pragma once

#include <string>
#include <vector>

namespace minrep::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0 = no stated budget
  std::string detail;           // worst residuals, counts, failure text
};

/// Runs every acceptance criterion at its pinned tolerance.  `only` restricts
/// to one criterion id (0 = all).
std::vector<CriterionResult> run_all(int only = 0);

/// One line per criterion: "[PASS] 4 semigroup oracle equivalence ... (2.1s)".
std::string format_line(const CriterionResult& r);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace minrep::acceptance
