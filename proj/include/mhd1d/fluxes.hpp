#pragma once

#include <span>
#include <vector>

#include "mhd1d/types.hpp"

namespace mhd1d::fluxes {

// Relative floor of the vacuum mask: nodes with rho0 >= kMaskRel * max(rho0)
// are "in the fluid" for the rho0-singular terms.
inline constexpr double kMaskRel = 1e-8;

struct VecField {
    Field c1, c2;
};

// Effective transverse flux F = mu * ddy(w)/J + h/(4 pi), componentwise.
VecField compute_F(const State& s, const Grid& grid, const Params& p);

// Effective longitudinal flux G = lambda * ddy(u)/J - P - |h|^2/(8 pi).
Field compute_G(const State& s, const Grid& grid, const Params& p);

// Boolean vacuum mask and its fill fraction.
std::vector<char> vacuum_mask(const Field& rho0);
double mask_fraction(const std::vector<char>& mask);

// Integrated momentum-balance identity: on the later state,
//   r = ddy(u)/J - (1/lambda) * ( d/dt int_{-L}^y rho0 u dx + P + |h|^2/(8 pi) ),
// with the time derivative taken as a backward difference across the pair.
// Returns the trapezoid L2 norm of r.
double residual_h2(const State& prev, const State& next, const Grid& grid, const Params& p);

// Parabolic equation satisfied by F, residual on the vacuum mask:
//   r = F_t - (mu/J)(F_y/rho0)_y + (ddy(u)/J) F - (1/(4 pi)) ddy(w)/J
//       - (nu/(4 pi J)) (h_y/J)_y.
// Time derivative backward across the pair, space terms on the later state.
// Only nodes whose full stencil lies inside the vacuum mask contribute.
// The weighted entry scales |r| by sqrt(rho0): the flux equations are
// degenerate parabolic and only controlled under the density weight, so the
// unweighted residual blows up at mask edges where rho0 spans many decades
// while the weighted one stays bounded for a consistent trajectory.
struct MaskedResidual {
    double l2 = 0.0;           // masked L2 of |r|
    double l2_weighted = 0.0;  // masked L2 of sqrt(rho0) |r|
    double fraction = 0.0;     // fraction of nodes inside the stencil mask
};
MaskedResidual residual_F_equation(const State& prev, const State& next, const Grid& grid,
                                   const Params& p);

// Same for the longitudinal flux equation:
//   r = G_t - (lambda/J)(G_y/rho0)_y + gamma (ddy(u)/J) G
//       - ((2-gamma)/(8 pi)) (ddy(u)/J) |h|^2 + (gamma-1) mu |ddy(w)/J|^2
//       + h . ddy(w) / (4 pi J) + (nu/(4 pi)) ((gamma-1)|ddy(h)/J|^2 + (h/J).(h_y/J)_y).
MaskedResidual residual_G_equation(const State& prev, const State& next, const Grid& grid,
                                   const Params& p);

// Integrating-factor reconstruction of J |h|^2 at the final history entry.
// With A(y,t) = -rho0(y) u(y,t)/lambda and a(y,t) = int_{-L}^y A dz:
//   (J|h|^2)(t) = e^{a(t)-a(0)} (J|h|^2)(0)
//     + int_0^t e^{a(t)-a(s)} [ 2 nu h.(h_y/J)_y + 2 ddy(w).h
//                               - (1/lambda)(P + |h|^2/(8 pi)) J|h|^2 ](s) ds,
// the time integral by the trapezoid rule over the history. The history must
// hold >= 1 states with strictly increasing t; a single entry reproduces the
// initial J|h|^2 exactly. Returns the reconstructed field.
Field reconstruct_Jh2(std::span<const State> history, const Grid& grid, const Params& p);

// Relative L2 mismatch between the reconstruction and the direct J|h|^2 of
// the final history entry (0 when both vanish).
double reconstruct_Jh2_mismatch(std::span<const State> history, const Grid& grid, const Params& p);

// Exponential reconstruction of the Jacobian at the final history entry:
//   J(t) = J(0) * exp( (1/lambda) int_0^t (G + P + |h|^2/(8 pi)) ds ),
// trapezoid in time. Returns the reconstructed field.
Field reconstruct_J(std::span<const State> history, const Grid& grid, const Params& p);

// Relative sup mismatch between the reconstruction and the evolved J.
double reconstruct_J_mismatch(std::span<const State> history, const Grid& grid, const Params& p);

// Flow map eta(y,t) = -L + int_{-L}^y J dx; strictly increasing while J > 0.
Field reconstruct_flow_map(const State& s, const Grid& grid);

// Consistency of the flow map with the velocity: relative L2 difference of
// (eta(next)-eta(prev))/(t_next-t_prev) against the pair average of
// u - u(-L). The subtraction of the left-end value reflects the anchoring
// eta(-L) = -L of the truncated map; it vanishes for decaying far fields.
double flow_map_velocity_gap(const State& prev, const State& next, const Grid& grid);

}  // namespace mhd1d::fluxes
