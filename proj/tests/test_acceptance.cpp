// Acceptance gate: every criterion runs and prints one pass/fail line.
#include <cstdio>

#include "doctest.h"
#include "homcolim/acceptance.hpp"

using namespace homcolim;

TEST_CASE("acceptance criteria") {
  for (int n = 1; n <= 11; ++n) {
    CriterionResult r = run_criterion(n);
    std::printf("criterion %2d [%s] %-55s (%.2fs) %s\n", r.number, r.pass ? "PASS" : "FAIL",
                r.title.c_str(), r.seconds, r.pass ? "" : r.detail.c_str());
    std::fflush(stdout);
    CHECK_MESSAGE(r.pass, "criterion ", r.number, ": ", r.detail);
  }
}
