#pragma once

#include "adicert/report.hpp"
#include "adicert/scenario.hpp"

namespace adicert {

struct RunOptions {
  int depth_override = 0; // 0 keeps the per-task depths
  bool strict = false;    // task errors abort; certified failures flag exit 2
};

struct RunOutcome {
  Json report;
  int exit_code = 0; // 0 success, 1 task/parse errors, 2 strict failures
};

/// Execute every task of the scenario in order; per-task errors are
/// captured in the report (and abort the run under strict).
RunOutcome run_scenario(const Scenario& sc, const RunOptions& opt);

} // namespace adicert
