// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <cstdio>

#include "minrep/acceptance.hpp"

int main() {
  const auto results = minrep::acceptance::run_all();
  for (const auto& r : results) std::printf("%s\n", minrep::acceptance::format_line(r).c_str());
  const bool ok = minrep::acceptance::all_passed(results);
  std::printf("%s: %zu criteria\n", ok ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              results.size());
  return ok ? 0 : 1;
}
