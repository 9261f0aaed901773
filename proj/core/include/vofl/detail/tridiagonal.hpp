#pragma once

#include <vector>

namespace vofl::detail {

struct TridiagonalEigen {
  std::vector<double> values;       // ascending
  std::vector<double> first_components;  // z_{0j} of the normalized eigenvector for values[j]
};

/// Eigen-decomposition of the symmetric tridiagonal matrix with diagonal
/// `diag` (size n) and off-diagonal `off` (size n-1) by implicit-shift QL.
/// Only the first row of the eigenvector matrix is accumulated.
/// Throws SolverError if an eigenvalue needs more than `max_sweeps` sweeps.
TridiagonalEigen tridiagonal_eigen(std::vector<double> diag, std::vector<double> off,
                                   int max_sweeps = 50);

}  // namespace vofl::detail
