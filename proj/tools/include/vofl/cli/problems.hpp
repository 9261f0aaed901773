#pragma once

// Built-in benchmark problems: the e^x derivative test and the two
// Bagley-Torvik type IVPs with known solutions.

#include <string>
#include <vector>

#include "vofl/collocation.hpp"

namespace vofl::cli {

/// Caputo derivative of sin at x for a single order value with ceiling n:
/// the term-wise Maclaurin sum in extended precision for x <= 8, otherwise a
/// closed form through the complex upper incomplete gamma Γ(n-ϱ, ix).
double caputo_sin_series(double order_value, int n, double x);

/// Max |D^ϱ u_N - D^ϱ e^x| over a uniform grid on [0, 1], u_N interpolating e^x.
/// The order's bounds are certified on that grid.
double example1_max_error(const LaguerreParams& params, int N, const ScalarFn& order,
                          int grid_size);

/// u'' + D^ϱ u + u = f on (0, L], u(0) = 0, u'(0) = 1; exact solution sin x.
IvpSpec example2_spec(const LaguerreParams& params, int N, const ScalarFn& order, double length);

/// u'' + D^ϱ u + u = Γ(4)/Γ(4-ϱ) x^{3-ϱ} + x³ + 7x + 1 on (0, π/2], u(0) = u'(0) = 1;
/// exact solution x³ + x + 1.
IvpSpec example3_spec(const LaguerreParams& params, int N, const ScalarFn& order);

double example2_exact(double x);
double example3_exact(double x);
inline constexpr double kExample3Length = 1.5707963267948966;

/// Order function whose bounds are certified at the collocation nodes of an
/// (N, n) problem. n is inferred from the order's value at the first node.
OrderFunction order_on_nodes(const LaguerreParams& params, int N, const ScalarFn& order);

}  // namespace vofl::cli
