#pragma once

#include <array>
#include <span>
#include <vector>

#include "mhd1d/stepper.hpp"
#include "mhd1d/types.hpp"

namespace mhd1d::oracle {

// Forward-Euler reference step of all five equations with the same spatial
// operators and boundary closures as the production scheme. Deliberately
// restricted to strictly positive density: in vacuum forward Euler has no
// meaningful momentum update. Rejects dt above the explicit diffusion
// stability bound 0.4 * dy^2 * min(J)^2 * min(1/lambda, 1/mu, min(J)/nu).
State explicit_reference_step(const State& s, const Params& p, const Grid& grid, double dt);

double explicit_stability_limit(const State& s, const Params& p, const Grid& grid);

// Manufactured solution built from a trigonometric-Gaussian family that
// vanishes (with derivatives) at +-L. With E(y) = exp(-y^2/sigma^2) and
// psi(y) = y E(y):
//   J* = 1 + aJ sin(t) psi'(y)     u* = aJ cos(t) psi(y)
//   w* = aw (cos t, sin t) E(y)    h* = ah (cos 2t E, sin 2t psi/sigma)
//   P* = aP (1 + pm sin t) E(y)    rho0* = rf + ra E(y)  (strictly positive)
// u* is the y-antiderivative of J*_t, so the continuity equation holds
// identically and only equations 2..5 need closed-form residual sources.
struct ManufacturedCase {
    double aJ = 0.1;
    double aw = 0.1;
    double ah = 0.1;
    double aP = 0.1;
    double pm = 0.5;
    double sigma = 4.0;
    double rf = 0.5, ra = 0.5;
    Params params;

    double J(double y, double t) const;
    double u(double y, double t) const;
    double w1(double y, double t) const;
    double w2(double y, double t) const;
    double h1(double y, double t) const;
    double h2(double y, double t) const;
    double P(double y, double t) const;
    double rho0(double y) const;

    double src_u(double y, double t) const;
    double src_w1(double y, double t) const;
    double src_w2(double y, double t) const;
    double src_h1(double y, double t) const;
    double src_h2(double y, double t) const;
    double src_P(double y, double t) const;
};

// Default case for a grid: sigma = L/5 keeps the profiles below 1e-10 at the
// ends while staying smooth on coarse grids.
ManufacturedCase default_case(const Grid& grid);

// All amplitudes zero: the exact solution is the rest state and every
// measured error sits at the round-off floor.
ManufacturedCase zero_amplitude_case(const Grid& grid);

// Exact profiles sampled at time t (J is not identically 1 for t > 0).
State sample_case(const ManufacturedCase& mc, const Grid& grid, double t);

// Sources wired for stepper::step.
stepper::StepSources case_sources(const ManufacturedCase& mc);

inline constexpr std::size_t kNumFields = 7;  // J, u, w1, w2, h1, h2, P
inline constexpr double kErrorFloor = 1e-12;

struct ConvergenceLevel {
    double h = 0.0;  // dy for the spatial axis, dt for the temporal axis
    std::array<double, kNumFields> field_err{};
    double aggregate = 0.0;  // RMS of the per-field relative L2 errors
};

struct OrderReport {
    std::vector<ConvergenceLevel> levels;
    std::array<double, kNumFields> field_order{};
    double order = 0.0;  // least-squares slope of the aggregate error
    bool monotone = true;
    bool at_floor = false;
};

// Runs the production stepper with the case sources to t_end at each grid
// with the fixed dt, measures final-time relative L2 errors per field, and
// fits log-log slopes. Needs >= 3 levels.
OrderReport spatial_convergence(const ManufacturedCase& mc, std::span<const int> grids,
                                double dt, double half_width, double t_end);

// Same along the time axis at one fixed grid.
OrderReport temporal_convergence(const ManufacturedCase& mc, int n_nodes,
                                 std::span<const double> dts, double half_width, double t_end);

}  // namespace mhd1d::oracle
