#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace unital::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

/// Runs criterion `id` in 1..11. Exceptions become failures. A result over
/// its time limit fails.
CriterionResult run_criterion(int id);

/// Runs all criteria in order; `on_result` sees each result as it lands.
std::vector<CriterionResult>
run_all(const std::function<void(const CriterionResult &)> &on_result = {});

/// "PASS  3  title (1.23 s): detail"
std::string format_line(const CriterionResult &r);

} // namespace unital::acceptance
