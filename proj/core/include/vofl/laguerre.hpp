#pragma once

// Generalized Laguerre polynomials L_i^{(θ,β)} orthogonal on (0, ∞) against
// the weight x^θ e^{-βx}: ladders, derivatives, norms, Gauss rules and the
// discrete interpolation transform built on them.

#include <concepts>
#include <functional>
#include <span>
#include <vector>

namespace vofl {

/// The pair (θ, β) selecting the polynomial family and its weight x^θ e^{-βx}.
class LaguerreParams {
 public:
  /// Throws DomainError unless theta > -1 and beta > 0.
  LaguerreParams(double theta, double beta);

  double theta() const { return theta_; }
  double beta() const { return beta_; }

  /// Same β, θ shifted by `dtheta` (families L^{(θ+m,β)} used by derivatives).
  LaguerreParams shifted(double dtheta) const { return {theta_ + dtheta, beta_}; }

  friend bool operator==(const LaguerreParams&, const LaguerreParams&) = default;

 private:
  double theta_;
  double beta_;
};

/// Generalized Laguerre-Gauss rule: zeros of L_{N+1} and their positive weights.
class QuadratureRule {
 public:
  QuadratureRule(LaguerreParams params, std::vector<double> nodes, std::vector<double> weights);

  const LaguerreParams& params() const { return params_; }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }
  std::size_t size() const { return nodes_.size(); }
  /// Highest degree of the basis this rule interpolates with (size() - 1).
  int degree() const { return static_cast<int>(nodes_.size()) - 1; }

  /// Σ_j w_j g(x_j), an approximation of ∫ g(x) x^θ e^{-βx} dx.
  template <std::invocable<double> F>
  double integrate(F&& g) const {
    double sum = 0.0;
    for (std::size_t j = 0; j < nodes_.size(); ++j) sum += weights_[j] * g(nodes_[j]);
    return sum;
  }

 private:
  LaguerreParams params_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Coefficients ℓ_0..ℓ_N of u_N = Σ ℓ_i L_i^{(θ,β)}.
class InterpolantCoeffs {
 public:
  InterpolantCoeffs(LaguerreParams params, std::vector<double> coeffs);

  const LaguerreParams& params() const { return params_; }
  std::span<const double> coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

 private:
  LaguerreParams params_;
  std::vector<double> coeffs_;
};

/// [L_0(x), ..., L_max_degree(x)] by the three-term recurrence.
std::vector<double> eval_basis(const LaguerreParams& params, int max_degree, double x);

/// Fills `out` with L_0(x)..L_{out.size()-1}(x); `out` must be nonempty.
void eval_basis_into(const LaguerreParams& params, double x, std::span<double> out);

/// L_i(0) = Γ(i+θ+1) / (Γ(θ+1) Γ(i+1)).
double value_at_zero(const LaguerreParams& params, int i);

/// m-th derivative of L_i at x: (-β)^m L_{i-m}^{(θ+m,β)}(x), zero for i < m.
double derivative_basis(const LaguerreParams& params, int i, int m, double x);

/// γ_i = ‖L_i‖² = Γ(i+θ+1) / (β^{θ+1} Γ(i+1)).
double norm(const LaguerreParams& params, int i);

/// (N+1)-point Gauss rule for the weight x^θ e^{-βx}; exact through degree 2N+1.
QuadratureRule gauss_rule(const LaguerreParams& params, int N);

/// Discrete transform ℓ_i = γ_i^{-1} Σ_j samples[j] L_i(x_j) w_j, i = 0..N.
InterpolantCoeffs interpolate(const QuadratureRule& rule, std::span<const double> samples);

/// Samples `u` at the rule's nodes and interpolates.
InterpolantCoeffs interpolate(const QuadratureRule& rule, const std::function<double(double)>& u);

/// u_N(x) = Σ ℓ_i L_i(x).
double eval_interpolant(const InterpolantCoeffs& coeffs, double x);

/// m-th derivative of u_N at x.
double eval_interpolant_derivative(const InterpolantCoeffs& coeffs, int m, double x);

}  // namespace vofl
