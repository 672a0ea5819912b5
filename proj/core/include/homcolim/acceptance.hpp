#pragma once

#include <string>
#include <vector>

namespace homcolim {

// One acceptance criterion outcome. `detail` carries the counts that make
// the verdict auditable; `seconds` is the wall-clock cost of the run.
struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs criterion `number` (1..11). Throws validation_error for an unknown
// number; computational failures are reported through `pass`/`detail`,
// never thrown.
CriterionResult run_criterion(int number);

// All eleven criteria in order.
std::vector<CriterionResult> run_acceptance();

}  // namespace homcolim
