#include "vofl/vof_operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "vofl/errors.hpp"
#include "vofl/special_functions.hpp"

namespace vofl {
namespace {

std::optional<int> integer_ceiling(double lo, double hi) {
  for (int n : {1, 2}) {
    if (lo > n - 1 + kOrderMargin && hi < n - kOrderMargin) return n;
  }
  return std::nullopt;
}

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

}  // namespace

OrderFunction::OrderFunction(Fn fn, double rho_min, double rho_max)
    : fn_(std::move(fn)), rho_min_(rho_min), rho_max_(rho_max) {
  if (!fn_) throw UsageError("OrderFunction: empty callable");
  if (!std::isfinite(rho_min) || !std::isfinite(rho_max) || rho_min <= 0.0 || rho_min > rho_max) {
    std::ostringstream msg;
    msg << "OrderFunction: need 0 < rho_min <= rho_max, got [" << rho_min << ", " << rho_max << "]";
    throw DomainError(msg.str());
  }
  ceiling_ = integer_ceiling(rho_min, rho_max);
}

OrderFunction OrderFunction::constant(double rho) {
  OrderFunction f([rho](double) { return rho; }, rho, rho);
  f.constant_ = true;
  return f;
}

OrderFunction OrderFunction::sampled(Fn fn, std::span<const double> points) {
  if (points.empty()) throw UsageError("OrderFunction::sampled: no sample points");
  if (!fn) throw UsageError("OrderFunction: empty callable");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double x : points) {
    const double v = fn(x);
    if (!std::isfinite(v)) {
      throw DomainError("OrderFunction::sampled: order is not finite at x = " + std::to_string(x));
    }
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return OrderFunction(std::move(fn), lo, hi);
}

int OrderFunction::n() const {
  if (!ceiling_) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "order bounds [" << rho_min_ << ", " << rho_max_
        << "] do not lie strictly inside (0, 1) or (1, 2)";
    throw DomainError(msg.str());
  }
  return *ceiling_;
}

void require_order_in_band(double value, int n, double x) {
  if (!(value > n - 1 + kOrderMargin && value < n - kOrderMargin)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "order " << value << " at x = " << x << " is outside (" << n - 1 << ", " << n << ")";
    throw DomainError(msg.str());
  }
}

FracBasisValues frac_integral_basis(const LaguerreParams& params, double rho, int max_degree,
                                    double x) {
  if (!std::isfinite(rho) || rho <= 0.0) {
    throw DomainError("frac_integral_basis: order must be > 0, got " + std::to_string(rho));
  }
  if (max_degree < 0) throw UsageError("frac_integral_basis: degree must be >= 0");
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError("frac_integral_basis: x must be finite and >= 0, got " + std::to_string(x));
  }
  const auto n = static_cast<std::size_t>(max_degree) + 1;
  FracBasisValues out{rho, x, std::vector<double>(n, 0.0)};
  if (x == 0.0) return out;

  auto& v = out.values;
  const double theta = params.theta();
  const double bx = params.beta() * x;
  const double x_rho = std::exp(rho * std::log(x));
  v[0] = x_rho * reciprocal_gamma(rho + 1.0);
  if (n == 1) return out;
  // I^ρ applied to L_1 = θ+1-βx.
  v[1] = (theta + 1.0) * v[0] - bx * x_rho * reciprocal_gamma(rho + 2.0);

  // L_i(0) - L_{i+1}(0) = -θ L_i(0) / (i+1), carried without cancellation.
  const double boundary = x_rho * reciprocal_gamma(rho);
  double at_zero = theta + 1.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double di = static_cast<double>(i);
    const double jump = -theta * at_zero / (di + 1.0);
    v[i + 1] = ((2.0 * di + theta + rho + 1.0 - bx) * v[i] - (di + theta) * v[i - 1] - boundary * jump) /
               (di + rho + 1.0);
    at_zero *= (di + theta + 1.0) / (di + 1.0);
  }
  return out;
}

double vo_integral(const InterpolantCoeffs& coeffs, const OrderFunction& order, double x) {
  const double rho = order(x);
  const auto ladder = frac_integral_basis(coeffs.params(), rho, coeffs.degree(), x);
  return dot(coeffs.coeffs(), ladder.values);
}

std::vector<double> caputo_row(const LaguerreParams& params, const OrderFunction& order,
                               int max_degree, double x) {
  if (max_degree < 0) throw UsageError("caputo_row: degree must be >= 0");
  const int n = order.n();
  const double rho = order(x);
  require_order_in_band(rho, n, x);
  std::vector<double> row(static_cast<std::size_t>(max_degree) + 1, 0.0);
  if (max_degree < n) {
    if (!std::isfinite(x) || x < 0.0) throw DomainError("caputo_row: x must be >= 0");
    return row;
  }
  const auto ladder = frac_integral_basis(params.shifted(n), n - rho, max_degree - n, x);
  const double scale = std::pow(-params.beta(), n);
  for (std::size_t i = static_cast<std::size_t>(n); i < row.size(); ++i) {
    row[i] = scale * ladder.values[i - static_cast<std::size_t>(n)];
  }
  return row;
}

double vo_derivative(const InterpolantCoeffs& coeffs, const OrderFunction& order, double x) {
  const auto row = caputo_row(coeffs.params(), order, coeffs.degree(), x);
  return dot(coeffs.coeffs(), row);
}

double caputo_power_rule(double gamma_exp, double order_value, int n, double x) {
  if (n < 1) throw UsageError("caputo_power_rule: n must be >= 1");
  require_order_in_band(order_value, n, x);
  if (!std::isfinite(gamma_exp) || gamma_exp < 0.0) {
    throw DomainError("caputo_power_rule: exponent must be >= 0");
  }
  if (!std::isfinite(x) || x < 0.0) throw DomainError("caputo_power_rule: x must be >= 0");
  if (gamma_exp <= n - 1) return 0.0;
  const double coef = gamma_ratio(gamma_exp + 1.0, gamma_exp + 1.0 - order_value);
  if (x == 0.0) return coef * std::pow(0.0, gamma_exp - order_value);
  return coef * std::exp((gamma_exp - order_value) * std::log(x));
}

double caputo_exp_exact(const OrderFunction& order, double x) {
  const int n = order.n();
  const double rho = order(x);
  require_order_in_band(rho, n, x);
  return std::exp(x) * reg_lower_incomplete_gamma(n - rho, x);
}

}  // namespace vofl
