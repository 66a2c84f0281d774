#pragma once

#include <functional>
#include <string>

#include "mhd1d/types.hpp"

namespace mhd1d::stepper {

// Per-equation external forcing evaluated at (y, t); used by the manufactured
// solution harness. The continuity equation J_t = u_y needs no hook: the
// manufactured profiles satisfy it identically by construction.
struct StepSources {
    std::function<double(double, double)> u, w1, w2, h1, h2, P;
};

struct StepConfig {
    double dt_max       = 1e-2;
    double cfl_fraction = 0.5;
    double t_end        = 1.0;
    int output_every    = 10;

    void validate() const {
        if (!(dt_max > 0.0)) throw ValidationError("dt_max must be positive");
        if (!(cfl_fraction > 0.0) || cfl_fraction > 1.0)
            throw ValidationError("cfl_fraction must lie in (0, 1]");
        if (!(t_end >= 0.0)) throw ValidationError("t_end must be nonnegative");
        if (output_every < 1) throw ValidationError("output_every must be at least 1");
    }
};

// Rate-limited step size:
//   dt = cfl_fraction * min(dt_max, 0.1/max|ddy(u)/J|, 0.1/max a),
// where a = gamma*ddy(u)/J is the pressure-equation decay rate. A rate term
// is skipped when its maximum is nonpositive, so the result is always > 0.
double select_dt(const State& s, const Params& p, const StepConfig& cfg, const Grid& grid);

// One semi-implicit step of size dt. Update order u -> w -> h -> P -> J with
// coefficients lagged at the old state:
//   u, w: backward-Euler tridiagonal solves, zero-flux (Neumann) ends;
//   h:    backward-Euler tridiagonal solve with the stretching term
//         ddy(u_new)/J_old on the diagonal, h = 0 at the ends (Dirichlet);
//   P:    exact integrating-factor update, nonnegative by construction;
//   J:    pointwise exponential update, positive by construction.
// All solves stay well-posed with rho0 = 0 on any subset of nodes, provided
// rho0 > 0 somewhere (checked). Throws SolverError on a nonpositive diagonal
// and BlowupError when any field magnitude passes kBlowupMagnitude.
State step(const State& s, const Params& p, const Grid& grid, double dt,
           const StepSources* sources = nullptr);

enum class RunOutcome { ok, blowup, solver_failure };

struct RunResult {
    RunOutcome outcome = RunOutcome::ok;
    std::string message;
    State final_state;
    long steps = 0;
    // Extrema tracked over every step, not just output steps.
    double min_J_overall = 0.0;
    double min_P_overall = 0.0;
};

// Called at the output cadence (step 0, every output_every-th step, and the
// final step) with the freshly advanced state.
using SnapshotSink = std::function<void(const State&)>;

// Advances from s0 until t >= t_end (the last dt is clamped to land on t_end
// exactly). Errors from step() become a structured outcome, not an exception.
RunResult run(const State& s0, const Params& p, const Grid& grid, const StepConfig& cfg,
              const SnapshotSink& on_snapshot = {}, const StepSources* sources = nullptr);

}  // namespace mhd1d::stepper
