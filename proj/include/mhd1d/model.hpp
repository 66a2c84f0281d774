#pragma once

#include "mhd1d/types.hpp"

namespace mhd1d::model {

enum class FamilyKind {
    gaussian_vacuum,   // Gaussian rho0, far-field vacuum
    compact_support,   // rho0 = amp * max(0, 1 - (y/width)^2), exact vacuum outside
    point_vacuum,      // rho0 = amp * (y/width)^2 exp(-(y/width)^2), vacuum at y = 0
    positive_floor,    // rho0 >= floor > 0 everywhere (oracle-compatible)
    all_zero,          // rest state: u = w = h = P = 0
};

// Profile parameters shared by the families. Every non-density field is a
// Gaussian bump amp * exp(-(y/width)^2); amplitudes default to zero so a
// family selects only what the scenario switches on. rho_floor is used by
// positive_floor alone.
struct InitialFamily {
    FamilyKind kind = FamilyKind::gaussian_vacuum;
    double rho_amp = 1.0, rho_width = 1.0, rho_floor = 0.0;
    double u_amp = 0.0, u_width = 1.0;
    double w1_amp = 0.0, w2_amp = 0.0, w_width = 1.0;
    double h1_amp = 0.0, h2_amp = 0.0, h_width = 1.0;
    double p_amp = 0.0, p_width = 1.0;
};

// Tolerance for the far-field admissibility check on h0 and P0 at both ends.
inline constexpr double kBoundaryDecayTol = 1e-12;

// Samples a family on the grid with J == 1 and t = 0. Discontinuous profiles
// would be sampled by left limit at jump nodes; the shipped families are all
// continuous. Throws ValidationError on inadmissible data (negative rho0 or
// P0, h0/P0 not vanishing at the domain ends, nonfinite parameters).
State sample_initial_state(const InitialFamily& fam, const Grid& grid);

// Conserved total energy of the initial data (J == 1 required):
//   E0 = int ( rho0 u0^2/2 + rho0 |w0|^2/2 + |h0|^2/(8 pi) + P0/(gamma-1) ) dy.
double compute_E0(const State& s0, const Grid& grid, const Params& p);

// Time-uniform lower bound on the Jacobian:
//   J_lower = exp( -(2 sqrt 2 / lambda) * sqrt(mass1 * E0) ),
// with mass1 = ||rho0||_L1. Positive whenever inputs are finite.
double compute_J_lower_bound(double lambda, double mass1, double E0);

}  // namespace mhd1d::model
