#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace evoalg::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Runs criteria 1-9 in order. Exceptions inside a criterion count as a
/// failure of that criterion.
std::vector<CriterionResult> run_all(unsigned seed = 20240611);

/// `[PASS] 3 rational spot checks: ... (0.00 s)`
std::string format(const CriterionResult& r);

/// Prints one line per criterion and a summary; returns the failure count.
int report(const std::vector<CriterionResult>& results, std::ostream& out);

} // namespace evoalg::acceptance
