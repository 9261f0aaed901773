#pragma once

// Laguerre-Gauss spectral collocation for variable-order fractional IVPs
//
//   a(x) u^{(m)}(x) + b(x) D^{ϱ(x)} u(x) + c(x) u(x) = f(x),   x > 0,
//   u(0) = u0            (0 < ϱ < 1, m = 1)
//   u(0) = u0, u'(0) = v0 (1 < ϱ < 2, m ∈ {1, 2})
//
// The unknowns are the coefficients ℓ of u_N = Σ ℓ_i L_i^{(θ,β)}. Each
// column j of E holds one equation: the ODE at the j-th smallest zero of
// L_{N+1}, or an initial condition. The system ℓ E = F is solved as
// E^T ℓ^T = F^T by LU with partial pivoting after power-of-two row and
// column equilibration.

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "vofl/laguerre.hpp"
#include "vofl/vof_operators.hpp"

namespace vofl {

using ScalarFn = std::function<double(double)>;

struct IvpSpec {
  LaguerreParams params;
  int N;
  OrderFunction order;
  int m;  // order of the integer derivative multiplying a(x)
  ScalarFn a;
  ScalarFn b;
  ScalarFn c;
  ScalarFn f;
  double u0;
  std::optional<double> v0;  // required iff order.n() == 2
  double domain_length;
};

/// Throws UsageError / DomainError when the spec is inconsistent.
void validate(const IvpSpec& spec);

struct LinearSystem {
  Eigen::MatrixXd matrix;  // E: row i = basis function, column j = equation
  Eigen::VectorXd rhs;     // F
};

struct SolveResult {
  InterpolantCoeffs coeffs;
  double residual_inf;        // ‖E^T ℓ^T - F^T‖_∞
  double rhs_inf;             // ‖F‖_∞
  double condition_estimate;  // estimate of κ_1 of the equilibrated E^T
};

struct ErrorReport {
  int N;
  LaguerreParams params;
  double max_abs_error;
  int grid_size;
  double domain_length;
};

/// The `count` smallest zeros of L_{N+1}^{(θ,β)}, ascending.
std::vector<double> collocation_nodes(const LaguerreParams& params, int N, int count);

/// Number of ODE collocation equations for an order with ceiling n.
int collocation_count(int N, int n);

LinearSystem assemble(const IvpSpec& spec);

/// Solves and returns the coefficients; see solve_detailed for diagnostics.
InterpolantCoeffs solve(const IvpSpec& spec);

/// Throws SolverError if the matrix is singular to working precision.
SolveResult solve_detailed(const IvpSpec& spec);

/// Solves an assembled system directly.
SolveResult solve_system(const LinearSystem& system, const LaguerreParams& params);

/// Points kL/(grid_size-1), k = 0..grid_size-1.
std::vector<double> uniform_grid(double length, int grid_size);

/// Max |u_N - exact| over uniform_grid(length, grid_size).
ErrorReport max_abs_error(const InterpolantCoeffs& coeffs, const ScalarFn& exact, double length,
                          int grid_size);

}  // namespace vofl
