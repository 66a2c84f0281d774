#pragma once

#include <span>

#include "mhd1d/types.hpp"

namespace mhd1d::spatial {

// First derivative on the uniform grid: centered interior stencil, one-sided
// 3-point stencils at the endpoints. Exact on quadratics at every node.
Field ddy(std::span<const double> f, double dy);

// Flux-form second-order operator approximating (f_y / J)_y: the face value
// (f[i+1]-f[i])/dy is divided by the face-averaged J and differenced across
// faces. The two outer faces carry zero flux, which is exactly the Neumann
// closure the implicit solves use, and gives the operator its discrete
// summation-by-parts pairing with ddy under the trapezoid inner product.
Field div_flux(std::span<const double> f, std::span<const double> J, double dy);

// Trapezoid antiderivative anchored at the left endpoint: out[0] = 0.
Field cumulative_from_left(std::span<const double> f, double dy);

// Trapezoid quadrature of f over the grid.
double trapz(std::span<const double> f, double dy);

struct Norms {
    double l1   = 0.0;
    double l2   = 0.0;
    double linf = 0.0;
};

// Trapezoid-quadrature L1 and L2 plus the max norm.
Norms norms(std::span<const double> f, double dy);

double norm_l1(std::span<const double> f, double dy);
double norm_l2(std::span<const double> f, double dy);
double norm_linf(std::span<const double> f);

// (integral of weight * f^2 dy)^(1/2); weight must be nonnegative.
double norm_l2_weighted(std::span<const double> f, std::span<const double> weight, double dy);

// Pointwise magnitude of a 2-vector field.
Field vec_mag(std::span<const double> a, std::span<const double> b);

}  // namespace mhd1d::spatial
