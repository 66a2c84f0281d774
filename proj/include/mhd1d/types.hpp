#pragma once

#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace mhd1d {

using Field = std::vector<double>;

inline constexpr double kFourPi  = 4.0 * std::numbers::pi;
inline constexpr double kEightPi = 8.0 * std::numbers::pi;

// Any field whose magnitude passes this is treated as a blow-up, not a state.
inline constexpr double kBlowupMagnitude = 1e12;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input: config keys, parameter ranges, malformed states or files.
struct ValidationError : Error {
    using Error::Error;
};

// Tridiagonal assembly or solve lost well-posedness (nonpositive pivot/diagonal).
struct SolverError : Error {
    using Error::Error;
};

// A field left the representable regime; the run must stop with a report.
struct BlowupError : Error {
    using Error::Error;
};

// Physical constants of the planar system. The 4*pi magnetic coupling is kept
// literal (Gaussian units); it lives in kFourPi, not here.
struct Params {
    double lambda = 1.0;  // longitudinal viscosity
    double mu     = 1.0;  // transverse shear viscosity
    double nu     = 1.0;  // magnetic diffusivity
    double gamma  = 5.0 / 3.0;  // adiabatic exponent, must exceed 1

    void validate() const {
        if (!(lambda > 0.0)) throw ValidationError("lambda must be positive");
        if (!(mu > 0.0)) throw ValidationError("mu must be positive");
        if (!(nu > 0.0)) throw ValidationError("nu must be positive");
        if (!(gamma > 1.0)) throw ValidationError("gamma must exceed 1");
    }
};

// Uniform node grid on [-L, L]. Endpoints are exact by construction:
// node(0) == -L and node(N-1) == +L with no accumulation error.
struct Grid {
    double half_width = 20.0;  // L
    int n_nodes       = 257;   // N

    void validate() const {
        if (!(half_width > 0.0)) throw ValidationError("grid half-width must be positive");
        if (n_nodes < 3) throw ValidationError("grid needs at least 3 nodes");
    }

    double dy() const { return 2.0 * half_width / static_cast<double>(n_nodes - 1); }

    double node(int i) const {
        return half_width * (2.0 * static_cast<double>(i) / static_cast<double>(n_nodes - 1) - 1.0);
    }

    std::vector<double> nodes() const {
        std::vector<double> y(static_cast<std::size_t>(n_nodes));
        for (int i = 0; i < n_nodes; ++i) y[static_cast<std::size_t>(i)] = node(i);
        return y;
    }
};

// Evolved fields at one instant, plus the frozen Lagrangian density rho0.
// Planar transverse vectors are stored componentwise (w = (w1,w2), h = (h1,h2)).
struct State {
    double t = 0.0;
    Field J, u, w1, w2, h1, h2, P;
    Field rho0;

    std::size_t size() const { return J.size(); }

    void validate(const Grid& g) const;
};

}  // namespace mhd1d
