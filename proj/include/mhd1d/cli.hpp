#pragma once

#include <string>
#include <vector>

#include "mhd1d/types.hpp"

namespace mhd1d::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;       // bad config / bad input files
inline constexpr int kExitBlowup = 2;      // the run blew up or a solve degenerated
inline constexpr int kExitAssertion = 3;   // an asserted check failed
inline constexpr int kExitNonMonotone = 4; // convergence errors did not decrease

// Runs the scenario in the config file: writes diagnostics.csv, snapshots at
// the output cadence, and report.json into the output directory (MHD_OUT_DIR
// overrides the configured one). Asserted checks: energy drift within
// tolerance at every record, min J >= lower bound and > 0, P >= 0, and the
// sup-bound monitors within 5% slack at every record.
int cmd_run(const std::string& config_path);

// Recomputes identity residuals and reconstruction mismatches over a list of
// snapshot files (time-ordered). Prints a JSON report. The gating checks are
// schema consistency, positivity, flow-map monotonicity, and the relative
// identity residuals staying under `tol`.
int cmd_verify(const std::vector<std::string>& snapshot_paths, double tol = 0.5);

// Manufactured-solution convergence orders for a case id ("default" or
// "zero_amplitude"): a spatial sweep over the grid list at a fixed small dt
// and a temporal sweep over the dt list at a fixed fine grid. Prints a JSON
// order report. Bands: spatial 2.0 +- 0.3, temporal 1.0 +- 0.3; a case at
// the round-off floor passes by definition.
int cmd_converge(const std::string& case_id, const std::vector<int>& grids,
                 const std::vector<double>& dts);

}  // namespace mhd1d::cli
