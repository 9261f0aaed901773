#include "vofl/cli/problems.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "vofl/errors.hpp"
#include "vofl/special_functions.hpp"

namespace vofl::cli {

namespace {

// Below this the Maclaurin sum loses at most e^x·ε_long_double to cancellation.
constexpr double kSeriesLimit = 8.0;

double sin_series(double order_value, int n, double x) {
  // Odd powers γ = 2k+1 with γ > n-1 survive; D^ϱ x^γ / γ! = x^{γ-ϱ} / Γ(γ+1-ϱ).
  int gamma = 1;
  double sign = 1.0;
  while (gamma <= n - 1) {
    gamma += 2;
    sign = -sign;
  }
  if (x == 0.0) return 0.0;
  const double lead = sign * std::exp((gamma - order_value) * std::log(x)) *
                      reciprocal_gamma(gamma + 1.0 - order_value);
  const long double x2 = static_cast<long double>(x) * x;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 0; k < 2000; ++k) {
    const long double g = static_cast<long double>(gamma) + 2.0L * k - order_value;
    term *= -x2 / ((g + 1.0L) * (g + 2.0L));
    sum += term;
    if (g > x && std::fabs(term) <= 1e-21L * std::fabs(sum)) break;
  }
  return lead * static_cast<double>(sum);
}

// Γ(a, z) by the modified Lentz continued fraction, Re z >= 0, |z| large.
std::complex<double> upper_gamma_cf(double a, std::complex<double> z) {
  constexpr double tiny = 1e-300;
  std::complex<double> b = z + 1.0 - a;
  std::complex<double> c = 1.0 / tiny;
  std::complex<double> d = 1.0 / b;
  std::complex<double> h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const std::complex<double> delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-z + a * std::log(z)) * h;
}

// With a = n - ϱ: D^ϱ sin x = Im[ i^n e^{i(x - πa/2)} (1 - Γ(a, ix)/Γ(a)) ].
double sin_closed_form(double order_value, int n, double x) {
  const double a = n - order_value;
  const std::complex<double> tail = upper_gamma_cf(a, {0.0, x}) * reciprocal_gamma(a);
  const std::complex<double> rot = std::polar(1.0, x - std::numbers::pi * a / 2.0 + n * std::numbers::pi / 2.0);
  return (rot * (1.0 - tail)).imag();
}

}  // namespace

double caputo_sin_series(double order_value, int n, double x) {
  require_order_in_band(order_value, n, x);
  if (!std::isfinite(x) || x < 0.0) throw DomainError("caputo_sin_series: x must be >= 0");
  return x <= kSeriesLimit ? sin_series(order_value, n, x) : sin_closed_form(order_value, n, x);
}

double example1_max_error(const LaguerreParams& params, int N, const ScalarFn& order,
                          int grid_size) {
  const auto grid = uniform_grid(1.0, grid_size);
  const auto rho = OrderFunction::sampled(order, grid);
  (void)rho.n();
  const auto rule = gauss_rule(params, N);
  const auto coeffs = interpolate(rule, [](double x) { return std::exp(x); });
  double worst = 0.0;
  for (double x : grid) {
    worst = std::max(worst, std::fabs(vo_derivative(coeffs, rho, x) - caputo_exp_exact(rho, x)));
  }
  return worst;
}

OrderFunction order_on_nodes(const LaguerreParams& params, int N, const ScalarFn& order) {
  // Both candidate node sets are prefixes of the same ascending zero list, so
  // certify on the larger one and let n follow from the values there.
  const auto nodes = collocation_nodes(params, N, N);
  return OrderFunction::sampled(order, nodes);
}

namespace {

IvpSpec bagley_torvik(const LaguerreParams& params, int N, const ScalarFn& order, ScalarFn f,
                      double u0, double v0, double length) {
  return IvpSpec{params,
                 N,
                 order_on_nodes(params, N, order),
                 2,
                 [](double) { return 1.0; },
                 [](double) { return 1.0; },
                 [](double) { return 1.0; },
                 std::move(f),
                 u0,
                 v0,
                 length};
}

}  // namespace

double example2_exact(double x) { return std::sin(x); }

double example3_exact(double x) { return x * x * x + x + 1.0; }

IvpSpec example2_spec(const LaguerreParams& params, int N, const ScalarFn& order, double length) {
  auto f = [order](double x) { return caputo_sin_series(order(x), 2, x); };
  return bagley_torvik(params, N, order, f, 0.0, 1.0, length);
}

IvpSpec example3_spec(const LaguerreParams& params, int N, const ScalarFn& order) {
  auto f = [order](double x) {
    return caputo_power_rule(3.0, order(x), 2, x) + x * x * x + 7.0 * x + 1.0;
  };
  return bagley_torvik(params, N, order, f, 1.0, 1.0, kExample3Length);
}

}  // namespace vofl::cli
