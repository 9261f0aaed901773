// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vofl/cli/problems.hpp"
#include "vofl/collocation.hpp"
#include "vofl/laguerre.hpp"
#include "vofl/vof_operators.hpp"

using namespace vofl;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double time_limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome r{false, ""};
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < time_limit;
  const bool pass = r.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s criterion %d: %s | %s | %.3f s (limit %.0f s)%s\n", pass ? "PASS" : "FAIL", id, title,
              r.detail.c_str(), secs, time_limit, in_time ? "" : " TOO SLOW");
  std::fflush(stdout);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Worst |vo_derivative - exact| on the 1001-point grid of [0, 1], as in the example1 table.
double example1_error(double theta, double beta, int N, const ScalarFn& order) {
  return cli::example1_max_error(LaguerreParams(theta, beta), N, order, 1001);
}

double solve_error(const IvpSpec& spec, const ScalarFn& exact, double length) {
  return max_abs_error(solve(spec), exact, length, 1001).max_abs_error;
}

}  // namespace


int main() {
  criterion(1, "Table 1 constant orders, (2,6), N=20", 5.0, [] {
    const std::vector<std::pair<double, double>> cells{{0.2, 1.09e-12}, {0.5, 2.73e-12}, {0.8, 8.64e-12},
                                                       {1.2, 4.13e-11}, {1.5, 9.46e-11}, {1.8, 2.73e-10}};
    bool ok = true;
    std::string detail;
    for (auto [rho, paper] : cells) {
      const double err = example1_error(2, 6, 20, [rho](double) { return rho; });
      const double bound = std::max(100.0 * paper, 1e-10);
      ok = ok && err <= bound;
      detail += "rho=" + std::to_string(rho).substr(0, 3) + ":" + sci(err) + "<=" + sci(bound) + " ";
    }
    return Outcome{ok, detail};
  });

  criterion(2, "Table 2 variable orders, (3,6), N=20", 5.0, [] {
    const double e1 = example1_error(3, 6, 20, [](double x) { return (9.0 + std::sin(x)) / 10.0; });
    const double e2 = example1_error(3, 6, 20, [](double x) { return (3.0 + std::tanh(x)) / 2.0; });
    return Outcome{e1 <= 1e-8 && e2 <= 1e-7,
                   "(9+sin x)/10:" + sci(e1) + "<=1e-8 (3+tanh x)/2:" + sci(e2) + "<=1e-7"};
  });

  criterion(3, "Table 3 Bagley-Torvik, (3,6), L=1", 10.0, [] {
    const LaguerreParams p(3, 6);
    const auto half3 = [](double) { return 1.5; };
    const auto vo = [](double x) { return (9.0 + std::sin(x - 10.0)) / 5.0; };
    const double a = solve_error(cli::example2_spec(p, 10, half3, 1.0), cli::example2_exact, 1.0);
    const double b = solve_error(cli::example2_spec(p, 20, half3, 1.0), cli::example2_exact, 1.0);
    const double c = solve_error(cli::example2_spec(p, 20, vo, 1.0), cli::example2_exact, 1.0);
    return Outcome{a <= 1e-6 && b <= 1e-12 && c <= 1e-11, "3/2 N=10:" + sci(a) + "<=1e-6 3/2 N=20:" + sci(b) +
                                                             "<=1e-12 variable N=20:" + sci(c) + "<=1e-11"};
  });

  criterion(4, "Table 4 collocation, theta=beta=10", 2.0, [] {
    const LaguerreParams p(10, 10);
    double worst = 0.0;
    for (const auto& order : std::vector<ScalarFn>{[](double) { return 1.5; },
                                                   [](double x) { return 1.0 + 0.5 * std::fabs(std::sin(x)); }}) {
      for (int N : {3, 4, 5}) {
        worst = std::max(worst, solve_error(cli::example3_spec(p, N, order), cli::example3_exact, cli::kExample3Length));
      }
    }
    return Outcome{worst <= 1e-12, "worst over 6 cells:" + sci(worst) + "<=1e-12"};
  });

  criterion(5, "oracle suite", 30.0, [] {
    double worst_frac = 0.0;
    for (auto [theta, beta] : std::vector<std::pair<double, double>>{{0, 1}, {1, 3}, {2, 4}}) {
      const LaguerreParams p(theta, beta);
      for (double rho : {0.3, 0.5, 0.9, 1.5}) {
        for (double x : {0.2, 1.0, 3.0}) {
          const auto ladder = frac_integral_basis(p, rho, 8, x);
          for (int i = 0; i <= 8; ++i) {
            const double ref = oracle::riemann_liouville([&](double t) { return eval_basis(p, i, t)[i]; }, rho, x);
            worst_frac = std::max(worst_frac, std::fabs(ladder.values[i] - ref));
          }
        }
      }
    }
    double worst_row = 0.0;
    for (double rho : {1.2, 1.5, 1.8}) {
      const LaguerreParams p(2, 4);
      for (double x : {0.2, 0.8, 2.0}) {
        const auto row = caputo_row(p, OrderFunction::constant(rho), 8, x);
        for (int i = 0; i <= 8; ++i) {
          const double ref =
              oracle::riemann_liouville([&](double t) { return derivative_basis(p, i, 2, t); }, 2.0 - rho, x);
          worst_row = std::max(worst_row, std::fabs(row[i] - ref));
        }
      }
    }
    double worst_poly = 0.0;
    const std::vector<double> a{1.0, 2.0, -1.0, 0.5, 0.25};
    for (auto [theta, beta] : std::vector<std::pair<double, double>>{{0, 1}, {2, 4}, {3, 6}}) {
      const auto coeffs = interpolate(gauss_rule(LaguerreParams(theta, beta), 6), [&](double x) {
        double s = 0.0;
        for (std::size_t k = a.size(); k-- > 0;) s = s * x + a[k];
        return s;
      });
      for (double rho : {0.2, 0.5, 0.8, 1.2, 1.5, 1.8}) {
        const auto order = OrderFunction::constant(rho);
        for (int k = 1; k <= 20; ++k) {
          const double x = 0.1 * k;
          double expected = 0.0;
          for (std::size_t g = 0; g < a.size(); ++g) expected += a[g] * caputo_power_rule(double(g), rho, order.n(), x);
          worst_poly = std::max(worst_poly, std::fabs(vo_derivative(coeffs, order, x) - expected));
        }
      }
    }
    return Outcome{worst_frac <= 1e-8 && worst_row <= 1e-8 && worst_poly <= 1e-10,
                   "frac_integral_basis:" + sci(worst_frac) + "<=1e-8 caputo_row:" + sci(worst_row) +
                       "<=1e-8 polynomials:" + sci(worst_poly) + "<=1e-10"};
  });

  criterion(6, "Gauss rule moment exactness", 5.0, [] {
    double worst = 0.0;
    for (auto [theta, beta] : std::vector<std::pair<double, double>>{{0, 1}, {1, 3}, {2, 6}, {3, 6}}) {
      for (int N : {5, 10, 20, 40}) {
        const auto rule = gauss_rule(LaguerreParams(theta, beta), N);
        for (int k = 0; k <= 2 * N + 1; ++k) {
          const double got = rule.integrate([k](double x) { return std::pow(x, k); });
          const double ref = std::exp(oracle::log_moment(k, theta, beta));
          worst = std::max(worst, std::fabs(got - ref) / ref);
        }
      }
    }
    return Outcome{worst <= 1e-10, "worst relative error:" + sci(worst) + "<=1e-10"};
  });

  criterion(7, "solver invariants", 2.0, [] {
    std::vector<IvpSpec> specs;
    const auto basset_f = [](double x) { return 2.0 * x + caputo_power_rule(2.0, 0.5, 1, x) + x * x + 1.0; };
    const auto one = [](double) { return 1.0; };
    const IvpSpec basset{LaguerreParams(2, 4), 10, OrderFunction::constant(0.5), 1, one, one, one, basset_f,
                         1.0, std::nullopt, 1.0};
    specs.push_back(basset);
    for (int N : {5, 10, 15, 20}) {
      specs.push_back(cli::example2_spec(LaguerreParams(3, 6), N, [](double) { return 1.5; }, 1.0));
      specs.push_back(cli::example2_spec(LaguerreParams(3, 6), N, [](double x) { return (9.0 + std::sin(x - 10.0)) / 5.0; }, 1.0));
    }
    for (int N : {3, 4, 5}) {
      specs.push_back(cli::example3_spec(LaguerreParams(10, 10), N, [](double x) { return 1.0 + 0.5 * std::fabs(std::sin(x)); }));
    }
    double worst_res = 0.0;
    double worst_ic = 0.0;
    for (const auto& s : specs) {
      const auto r = solve_detailed(s);
      worst_res = std::max(worst_res, r.residual_inf / r.rhs_inf);
      worst_ic = std::max(worst_ic, std::fabs(eval_interpolant(r.coeffs, 0.0) - s.u0));
      if (s.v0) worst_ic = std::max(worst_ic, std::fabs(eval_interpolant_derivative(r.coeffs, 1, 0.0) - *s.v0));
    }
    const double basset_err = solve_error(basset, [](double x) { return x * x + 1.0; }, 1.0);
    return Outcome{worst_res <= 1e-10 && worst_ic <= 1e-10 && basset_err <= 1e-10,
                   "residual/|F|:" + sci(worst_res) + "<=1e-10 initial conditions:" + sci(worst_ic) +
                       "<=1e-10 Basset N=10:" + sci(basset_err) + "<=1e-10"};
  });

  criterion(8, "convergence in place of exact 1e-15 cells", 10.0, [] {
    const LaguerreParams p(3, 6);
    const auto half3 = [](double) { return 1.5; };
    const double e5 = solve_error(cli::example2_spec(p, 5, half3, 1.0), cli::example2_exact, 1.0);
    const double e20 = solve_error(cli::example2_spec(p, 20, half3, 1.0), cli::example2_exact, 1.0);
    return Outcome{e20 <= 1e-3 * e5, "AE(N=20)=" + sci(e20) + " <= 1e-3*AE(N=5)=" + sci(1e-3 * e5)};
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
