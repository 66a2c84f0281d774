#pragma once

#include <string>
#include <vector>

#include "mhd1d/types.hpp"

namespace mhd1d::diagnostics {

// Total energy of the evolved state,
//   E(t) = int ( rho0 u^2/2 + rho0 |w|^2/2 + J |h|^2/(8 pi) + J P/(gamma-1) ) dy.
// Conserved exactly in the continuum; the drift |E - E0| is the scheme's
// first-order error signature. At t = 0 (J == 1) this reproduces the initial
// energy bitwise.
double total_energy(const State& s, const Grid& grid, const Params& p);

struct BoundCheck {
    double min_J = 0.0;
    double bound = 0.0;
    bool satisfied = false;
};

// min_i J_i against the a-priori lower bound (exact comparison, no slack:
// the shipped scenarios stay far from saturating it).
BoundCheck check_J_bound(const State& s, double J_lower);

// Discrete Agmon-type sup bounds. Slack = RHS - LHS for each chain:
//   h_sup:   ||h||_inf^2      <= 2 ||sqrt(J) h||_2 ||h_y/sqrt(J)||_2
//   F_sup:   ||F||_inf^2      <= 2 ||F||_2 ||ddy F||_2
//   G_sup:   ||G||_inf^2      <= 2 ||G||_2 ||ddy G||_2
//   hsq_sup: |||h|^2||_inf^2  <= 2 int |ddy|h|^2| |h|^2 dy
//   hyJ_sup: ||h_y/J||_inf^2  <= 2 int |h_y/J| |ddy(h_y/J)| dy
// A chain is satisfied when slack >= -0.05 * RHS (5% discretization slack).
struct MonitorReport {
    double slack_h_sup = 0.0, slack_F_sup = 0.0, slack_G_sup = 0.0;
    double slack_hsq_sup = 0.0, slack_hyJ_sup = 0.0;
    double min_rel_slack = 0.0;  // min over the five of slack/RHS; 0 for 0 <= 0
    bool satisfied = false;
};

MonitorReport inequality_monitors(const State& s, const Grid& grid, const Params& p);

struct DiagnosticsRecord {
    double t = 0.0;
    double energy = 0.0;
    double energy_rel_drift = 0.0;  // |E - E0| / E0, absolute when E0 == 0
    double J_min = 0.0, J_max = 0.0, J_bar = 0.0;

    double sqrho_u_l2 = 0.0, sqrho_w_l2 = 0.0, sqJ_h_l2 = 0.0;
    double hy_sqJ_l2 = 0.0, wy_sqJ_l2 = 0.0, sqJ_F_l2 = 0.0, sqJ_G_l2 = 0.0;
    double P_linf = 0.0, P_l1 = 0.0, Jy_l2 = 0.0, Py_l2 = 0.0;
    double F_linf = 0.0, G_linf = 0.0, h_linf = 0.0;

    double slack_h_sup = 0.0, slack_F_sup = 0.0, slack_G_sup = 0.0;
    double slack_hsq_sup = 0.0, slack_hyJ_sup = 0.0;
    double min_rel_slack = 0.0;
    bool monitors_satisfied = true;

    // Cumulative trapezoid-in-time dissipation integrals
    // int ||h_y/sqrt(J)||_2^2, int ||ddy F/sqrt(rho0)||_2^2 (masked),
    // int ||ddy G/sqrt(rho0)||_2^2 (masked).
    double diss_hy_int = 0.0, diss_Fy_int = 0.0, diss_Gy_int = 0.0;

    // Identity residuals; zero-filled with has_residuals = false on the first
    // record of a run (no earlier state to difference against).
    bool has_residuals = false;
    double res_h2_l2 = 0.0, res_F_l2 = 0.0, res_G_l2 = 0.0;
    double res_F_mask_fraction = 0.0, res_G_mask_fraction = 0.0;
    double rec_J_err = 0.0, rec_Jh2_err = 0.0;
    double flow_map_gap = 0.0;
};

// Per-run accumulation shared across records; the caller owns the history
// buffer and appends the freshest snapshot before calling make_record.
struct RunContext {
    double E0 = 0.0;
    double J_bar = 0.0;
    bool enable_h2 = true;
    bool enable_F_eq = true;
    bool enable_G_eq = true;
    bool enable_reconstructions = true;
    bool enable_flow_map = true;
    std::vector<State> history;  // snapshots at output cadence, oldest first

    // trapezoid state for the dissipation integrals
    bool primed = false;
    double prev_t = 0.0, prev_d_hy = 0.0, prev_d_Fy = 0.0, prev_d_Gy = 0.0;
    double int_hy = 0.0, int_Fy = 0.0, int_Gy = 0.0;
};

// Builds the record for `next`; `prev` is the previous output snapshot or
// nullptr on the first record. Mutates the context's running integrals.
DiagnosticsRecord make_record(const State* prev, const State& next, const Grid& grid,
                              const Params& p, RunContext& ctx);

// Frozen CSV schema. Header and 17-significant-digit rows; the golden-file
// test pins the header byte for byte.
const std::string& csv_header();
std::string csv_row(const DiagnosticsRecord& r);

}  // namespace mhd1d::diagnostics
