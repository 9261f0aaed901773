#include "vofl/laguerre.hpp"

#include <cmath>
#include <string>

#include "vofl/detail/tridiagonal.hpp"
#include "vofl/errors.hpp"
#include "vofl/special_functions.hpp"

namespace vofl {
namespace {

void require_abscissa(double x, const char* what) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError(std::string(what) + ": x must be finite and >= 0, got " + std::to_string(x));
  }
}

void require_degree(int i, const char* what) {
  if (i < 0) throw UsageError(std::string(what) + ": degree must be >= 0");
}

// L_{N+1}(x) and its derivative -β L_N^{(θ+1)}(x), for Newton polishing of the nodes.
std::pair<double, double> top_value_and_slope(const LaguerreParams& params, int N, double x,
                                              std::vector<double>& ladder,
                                              std::vector<double>& shifted_ladder) {
  eval_basis_into(params, x, ladder);
  eval_basis_into(params.shifted(1.0), x, shifted_ladder);
  return {ladder.back(), -params.beta() * shifted_ladder[static_cast<std::size_t>(N)]};
}

}  // namespace

LaguerreParams::LaguerreParams(double theta, double beta) : theta_(theta), beta_(beta) {
  if (!std::isfinite(theta) || theta <= -1.0) {
    throw DomainError("LaguerreParams: theta must be > -1, got " + std::to_string(theta));
  }
  if (!std::isfinite(beta) || beta <= 0.0) {
    throw DomainError("LaguerreParams: beta must be > 0, got " + std::to_string(beta));
  }
}

QuadratureRule::QuadratureRule(LaguerreParams params, std::vector<double> nodes,
                               std::vector<double> weights)
    : params_(params), nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.empty() || nodes_.size() != weights_.size()) {
    throw UsageError("QuadratureRule: nodes and weights must be nonempty and of equal length");
  }
}

InterpolantCoeffs::InterpolantCoeffs(LaguerreParams params, std::vector<double> coeffs)
    : params_(params), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw UsageError("InterpolantCoeffs: need at least one coefficient");
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw DomainError("InterpolantCoeffs: non-finite coefficient");
  }
}

void eval_basis_into(const LaguerreParams& params, double x, std::span<double> out) {
  require_abscissa(x, "eval_basis");
  if (out.empty()) throw UsageError("eval_basis: output span is empty");
  const double theta = params.theta();
  const double bx = params.beta() * x;
  out[0] = 1.0;
  if (out.size() == 1) return;
  out[1] = theta + 1.0 - bx;
  for (std::size_t i = 1; i + 1 < out.size(); ++i) {
    const double di = static_cast<double>(i);
    out[i + 1] = ((2.0 * di + theta + 1.0 - bx) * out[i] - (di + theta) * out[i - 1]) / (di + 1.0);
  }
}

std::vector<double> eval_basis(const LaguerreParams& params, int max_degree, double x) {
  require_degree(max_degree, "eval_basis");
  std::vector<double> out(static_cast<std::size_t>(max_degree) + 1);
  eval_basis_into(params, x, out);
  return out;
}

double value_at_zero(const LaguerreParams& params, int i) {
  require_degree(i, "value_at_zero");
  if (i == 0) return 1.0;
  const double theta = params.theta();
  return gamma_ratio(i + theta + 1.0, i + 1.0) / gamma_ratio(theta + 1.0, 1.0);
}

double derivative_basis(const LaguerreParams& params, int i, int m, double x) {
  require_degree(i, "derivative_basis");
  if (m < 0) throw UsageError("derivative_basis: derivative order must be >= 0");
  require_abscissa(x, "derivative_basis");
  if (i < m) return 0.0;
  const auto ladder = eval_basis(params.shifted(m), i - m, x);
  return std::pow(-params.beta(), m) * ladder.back();
}

double norm(const LaguerreParams& params, int i) {
  require_degree(i, "norm");
  const double theta = params.theta();
  return gamma_ratio(i + theta + 1.0, i + 1.0) * std::exp(-(theta + 1.0) * std::log(params.beta()));
}

QuadratureRule gauss_rule(const LaguerreParams& params, int N) {
  require_degree(N, "gauss_rule");
  const double theta = params.theta();
  const double beta = params.beta();
  const auto n = static_cast<std::size_t>(N) + 1;

  // Jacobi matrix of the monic recurrence, scaled by 1/β.
  std::vector<double> diag(n);
  std::vector<double> off(n - 1);
  for (std::size_t k = 0; k < n; ++k) diag[k] = (2.0 * k + theta + 1.0) / beta;
  for (std::size_t k = 1; k < n; ++k) off[k - 1] = std::sqrt(k * (k + theta)) / beta;
  auto eig = detail::tridiagonal_eigen(std::move(diag), std::move(off));

  std::vector<double> ladder(n + 1);
  std::vector<double> shifted_ladder(n);
  std::vector<double> nodes = std::move(eig.values);
  for (double& x : nodes) {
    // Newton polish on L_{N+1}; keep a step only when it shrinks the residual.
    for (int step = 0; step < 3; ++step) {
      const auto [p, dp] = top_value_and_slope(params, N, x, ladder, shifted_ladder);
      if (p == 0.0 || dp == 0.0) break;
      const double candidate = x - p / dp;
      if (!(candidate > 0.0)) break;
      const auto [pc, dpc] = top_value_and_slope(params, N, candidate, ladder, shifted_ladder);
      if (!(std::fabs(pc) < std::fabs(p))) break;
      x = candidate;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!(nodes[j] > 0.0) || (j > 0 && !(nodes[j] > nodes[j - 1]))) {
      throw SolverError("gauss_rule: computed nodes are not positive and strictly increasing (N=" +
                        std::to_string(N) + ")");
    }
  }

  // Christoffel weights w_j = 1 / Σ_i L_i(x_j)^2 / γ_i: a sum of positive terms, so tiny
  // weights at large nodes keep their relative accuracy.
  std::vector<double> inv_norms(n);
  for (std::size_t i = 0; i < n; ++i) inv_norms[i] = 1.0 / norm(params, static_cast<int>(i));
  std::vector<double> weights(n);
  std::span<double> head(ladder.data(), n);
  for (std::size_t j = 0; j < n; ++j) {
    eval_basis_into(params, nodes[j], head);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += head[i] * head[i] * inv_norms[i];
    weights[j] = std::isfinite(sum) ? 1.0 / sum : 0.0;
  }
  return QuadratureRule(params, std::move(nodes), std::move(weights));
}

InterpolantCoeffs interpolate(const QuadratureRule& rule, std::span<const double> samples) {
  if (samples.size() != rule.size()) {
    throw UsageError("interpolate: expected " + std::to_string(rule.size()) + " samples, got " +
                     std::to_string(samples.size()));
  }
  const auto& params = rule.params();
  const std::size_t n = rule.size();
  std::vector<double> coeffs(n, 0.0);
  std::vector<double> ladder(n);
  for (std::size_t j = 0; j < n; ++j) {
    eval_basis_into(params, rule.nodes()[j], ladder);
    const double sw = samples[j] * rule.weights()[j];
    for (std::size_t i = 0; i < n; ++i) coeffs[i] += sw * ladder[i];
  }
  for (std::size_t i = 0; i < n; ++i) coeffs[i] /= norm(params, static_cast<int>(i));
  return InterpolantCoeffs(params, std::move(coeffs));
}

InterpolantCoeffs interpolate(const QuadratureRule& rule, const std::function<double(double)>& u) {
  std::vector<double> samples;
  samples.reserve(rule.size());
  for (double x : rule.nodes()) samples.push_back(u(x));
  return interpolate(rule, samples);
}

double eval_interpolant(const InterpolantCoeffs& coeffs, double x) {
  const auto c = coeffs.coeffs();
  std::vector<double> ladder(c.size());
  eval_basis_into(coeffs.params(), x, ladder);
  double sum = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) sum += c[i] * ladder[i];
  return sum;
}

double eval_interpolant_derivative(const InterpolantCoeffs& coeffs, int m, double x) {
  if (m < 0) throw UsageError("eval_interpolant_derivative: derivative order must be >= 0");
  if (m == 0) return eval_interpolant(coeffs, x);
  const auto c = coeffs.coeffs();
  const auto mm = static_cast<std::size_t>(m);
  if (c.size() <= mm) {
    require_abscissa(x, "eval_interpolant_derivative");
    return 0.0;
  }
  std::vector<double> ladder(c.size() - mm);
  eval_basis_into(coeffs.params().shifted(m), x, ladder);
  double sum = 0.0;
  for (std::size_t i = mm; i < c.size(); ++i) sum += c[i] * ladder[i - mm];
  return std::pow(-coeffs.params().beta(), m) * sum;
}

}  // namespace vofl
