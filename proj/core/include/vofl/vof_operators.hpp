#pragma once

// Variable-order fractional integrals and type-I Caputo derivatives of
// generalized Laguerre expansions.
//
// The fractional integral of order ϱ(x) of L_i^{(θ,β)}, with the kernel
// exponent frozen at the outer point x,
//
//   \hat L_i(x) = Γ(ϱ(x))^{-1} ∫_0^x (x-t)^{ϱ(x)-1} L_i(t) dt,
//
// obeys a three-term recurrence in i, so a whole ladder costs O(N) per
// point. The Caputo derivative with n-1 < ϱ(x) < n is the fractional
// integral of order n-ϱ(x) applied to ∂^n L_i = (-β)^n L_{i-n}^{(θ+n,β)}.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "vofl/laguerre.hpp"

namespace vofl {

/// Minimum distance an order value must keep from the integers n-1 and n.
inline constexpr double kOrderMargin = 1e-12;

/// Variable order ϱ(x) with certified bounds. The callable must be pure.
class OrderFunction {
 public:
  using Fn = std::function<double(double)>;

  /// Bounds are taken on trust; throws DomainError if rho_min <= 0 or
  /// rho_min > rho_max.
  OrderFunction(Fn fn, double rho_min, double rho_max);

  /// ϱ(x) ≡ rho.
  static OrderFunction constant(double rho);

  /// Bounds certified by evaluating `fn` at every point of `points`.
  static OrderFunction sampled(Fn fn, std::span<const double> points);

  double operator()(double x) const { return fn_(x); }
  double rho_min() const { return rho_min_; }
  double rho_max() const { return rho_max_; }
  bool is_constant() const { return constant_; }

  /// Whether n-1 < rho_min <= rho_max < n (with margin) for some n in {1, 2}.
  bool has_integer_ceiling() const { return ceiling_.has_value(); }

  /// That n. Throws DomainError when the bounds straddle or touch an integer.
  int n() const;

 private:
  Fn fn_;
  double rho_min_;
  double rho_max_;
  bool constant_ = false;
  std::optional<int> ceiling_;
};

/// Ladder \hat L_0..\hat L_N at one point; `order_value` is the ϱ used there.
struct FracBasisValues {
  double order_value;
  double x;
  std::vector<double> values;
};

/// Fractional integral of order rho > 0 of L_0..L_max_degree, evaluated at x.
FracBasisValues frac_integral_basis(const LaguerreParams& params, double rho, int max_degree,
                                    double x);

/// I^{ϱ(x)} u_N (x) with ϱ evaluated at this x.
double vo_integral(const InterpolantCoeffs& coeffs, const OrderFunction& order, double x);

/// Row D_{i,n}^{(ϱ(x))}(x), i = 0..max_degree, of the Caputo differentiation matrix.
/// Throws DomainError if ϱ(x) is not strictly inside (n-1, n), n = order.n().
std::vector<double> caputo_row(const LaguerreParams& params, const OrderFunction& order,
                               int max_degree, double x);

/// Caputo derivative of order ϱ(x) of u_N at x.
double vo_derivative(const InterpolantCoeffs& coeffs, const OrderFunction& order, double x);

/// D^{ϱ} x^γ: zero for γ <= n-1, otherwise Γ(γ+1)/Γ(γ+1-ϱ) x^{γ-ϱ}.
/// Real γ > n-1 is accepted as the usual analytic continuation.
double caputo_power_rule(double gamma_exp, double order_value, int n, double x);

/// Closed-form Caputo derivative of e^x: e^x P(n-ϱ(x), x).
double caputo_exp_exact(const OrderFunction& order, double x);

/// Throws DomainError unless n-1 < value < n with the standard margin.
void require_order_in_band(double value, int n, double x);

}  // namespace vofl
