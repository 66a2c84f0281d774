#pragma once

#include <span>

#include "mhd1d/types.hpp"

namespace mhd1d {

// Tridiagonal system solved by the Thomas algorithm. The assembled systems
// are irreducibly diagonally dominant with positive diagonal, so elimination
// without pivoting is stable; solve() checks the pivots anyway and throws
// SolverError if one degenerates.
class TridiagonalSystem {
  public:
    explicit TridiagonalSystem(std::size_t n) : sub_(n, 0.0), diag_(n, 0.0), super_(n, 0.0) {}

    std::size_t size() const { return diag_.size(); }

    double& sub(std::size_t i) { return sub_[i]; }      // coefficient of x[i-1] in row i
    double& diag(std::size_t i) { return diag_[i]; }    // coefficient of x[i]
    double& super(std::size_t i) { return super_[i]; }  // coefficient of x[i+1]

    // Requires diag > 0 in every row (the assembly-time well-posedness check).
    void check_diagonal() const;

    // Solves A x = rhs; rhs may alias the output. Does not modify the matrix.
    Field solve(std::span<const double> rhs) const;

  private:
    Field sub_, diag_, super_;
};

}  // namespace mhd1d
