#include "vofl/collocation.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "vofl/errors.hpp"

namespace vofl {
namespace {

// ∂^m L_i(x) for i = 0..N, via one ladder of the shifted family.
std::vector<double> derivative_ladder(const LaguerreParams& params, int N, int m, double x) {
  std::vector<double> out(static_cast<std::size_t>(N) + 1, 0.0);
  if (m == 0) {
    eval_basis_into(params, x, out);
    return out;
  }
  if (N < m) return out;
  const auto shifted = eval_basis(params.shifted(m), N - m, x);
  const double scale = std::pow(-params.beta(), m);
  for (std::size_t i = static_cast<std::size_t>(m); i < out.size(); ++i) {
    out[i] = scale * shifted[i - static_cast<std::size_t>(m)];
  }
  return out;
}

double finite_or_throw(double v, const char* what, double x) {
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << " is not finite at x = " << x;
    throw DomainError(msg.str());
  }
  return v;
}

// 2^{-round(log2 m)} per entry; zero magnitudes keep scale 1.
Eigen::VectorXd equilibration(const Eigen::VectorXd& magnitudes) {
  Eigen::VectorXd scale(magnitudes.size());
  for (Eigen::Index k = 0; k < magnitudes.size(); ++k) {
    const double m = magnitudes(k);
    scale(k) = m > 0.0 ? std::ldexp(1.0, -std::ilogb(m)) : 1.0;
  }
  return scale;
}

}  // namespace

void validate(const IvpSpec& spec) {
  if (spec.N < 2) throw UsageError("IvpSpec: N must be >= 2");
  if (!spec.a || !spec.b || !spec.c || !spec.f) {
    throw UsageError("IvpSpec: coefficient functions a, b, c and forcing f are required");
  }
  if (!(spec.domain_length > 0.0) || !std::isfinite(spec.domain_length)) {
    throw UsageError("IvpSpec: domain length must be > 0");
  }
  const int n = spec.order.n();
  if (n == 1) {
    if (spec.m != 1) throw UsageError("IvpSpec: first-order problems (0 < order < 1) need m = 1");
    if (spec.v0) throw UsageError("IvpSpec: v0 must be absent when 0 < order < 1");
  } else {
    if (spec.m != 1 && spec.m != 2) throw UsageError("IvpSpec: m must be 1 or 2");
    if (!spec.v0) throw UsageError("IvpSpec: v0 is required when 1 < order < 2");
  }
}

std::vector<double> collocation_nodes(const LaguerreParams& params, int N, int count) {
  if (count < 0 || count > N + 1) {
    throw UsageError("collocation_nodes: count must be in [0, N+1]");
  }
  const auto rule = gauss_rule(params, N);
  const auto nodes = rule.nodes();
  return {nodes.begin(), nodes.begin() + count};
}

int collocation_count(int N, int n) { return N + 1 - n; }

LinearSystem assemble(const IvpSpec& spec) {
  validate(spec);
  const int N = spec.N;
  const int n = spec.order.n();
  const auto size = static_cast<Eigen::Index>(N) + 1;
  const auto nodes = collocation_nodes(spec.params, N, collocation_count(N, n));

  LinearSystem sys{Eigen::MatrixXd::Zero(size, size), Eigen::VectorXd::Zero(size)};
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double x = nodes[j];
    const double a = finite_or_throw(spec.a(x), "a(x)", x);
    const double b = finite_or_throw(spec.b(x), "b(x)", x);
    const double c = finite_or_throw(spec.c(x), "c(x)", x);
    const auto dm = derivative_ladder(spec.params, N, spec.m, x);
    const auto frac = caputo_row(spec.params, spec.order, N, x);
    const auto plain = derivative_ladder(spec.params, N, 0, x);
    const auto col = static_cast<Eigen::Index>(j);
    for (Eigen::Index i = 0; i < size; ++i) {
      const auto k = static_cast<std::size_t>(i);
      sys.matrix(i, col) = a * dm[k] + b * frac[k] + c * plain[k];
    }
    sys.rhs(col) = finite_or_throw(spec.f(x), "f(x)", x);
  }

  // Initial conditions occupy the trailing columns.
  const Eigen::Index ic = static_cast<Eigen::Index>(nodes.size());
  for (Eigen::Index i = 0; i < size; ++i) {
    sys.matrix(i, ic) = value_at_zero(spec.params, static_cast<int>(i));
  }
  sys.rhs(ic) = spec.u0;
  if (n == 2) {
    const auto slope = derivative_ladder(spec.params, N, 1, 0.0);
    for (Eigen::Index i = 0; i < size; ++i) sys.matrix(i, ic + 1) = slope[static_cast<std::size_t>(i)];
    sys.rhs(ic + 1) = *spec.v0;
  }
  return sys;
}

SolveResult solve_system(const LinearSystem& system, const LaguerreParams& params) {
  const Eigen::MatrixXd at = system.matrix.transpose();
  if (at.rows() != at.cols() || at.rows() != system.rhs.size() || at.rows() == 0) {
    throw UsageError("solve_system: matrix must be square and match the right-hand side");
  }
  if (!at.allFinite() || !system.rhs.allFinite()) {
    throw SolverError("solve_system: system contains non-finite entries");
  }
  // Equilibrate rows (equations) then columns (unknowns) by powers of two so the
  // scaling itself is exact. Rows of the Laguerre basis at large nodes are many
  // orders of magnitude larger than the initial-condition rows.
  const Eigen::VectorXd row_scale = equilibration(at.cwiseAbs().rowwise().maxCoeff());
  const Eigen::MatrixXd scaled_rows = row_scale.asDiagonal() * at;
  const Eigen::VectorXd col_scale = equilibration(scaled_rows.cwiseAbs().colwise().maxCoeff());
  const Eigen::MatrixXd scaled = scaled_rows * col_scale.asDiagonal();

  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(scaled);
  const double rcond = lu.rcond();
  const double condition = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  if (!(rcond > std::numeric_limits<double>::epsilon())) {
    std::ostringstream msg;
    msg << "solve_system: matrix is singular to working precision (condition estimate "
        << condition << ")";
    throw SolverError(msg.str());
  }
  const Eigen::VectorXd x =
      col_scale.asDiagonal() * lu.solve(row_scale.asDiagonal() * system.rhs).eval();
  if (!x.allFinite()) throw SolverError("solve_system: non-finite solution");
  const double residual = (at * x - system.rhs).lpNorm<Eigen::Infinity>();
  return SolveResult{InterpolantCoeffs(params, std::vector<double>(x.data(), x.data() + x.size())),
                     residual, system.rhs.lpNorm<Eigen::Infinity>(), condition};
}

SolveResult solve_detailed(const IvpSpec& spec) { return solve_system(assemble(spec), spec.params); }

InterpolantCoeffs solve(const IvpSpec& spec) { return solve_detailed(spec).coeffs; }

std::vector<double> uniform_grid(double length, int grid_size) {
  if (grid_size < 2) throw UsageError("uniform_grid: grid_size must be >= 2");
  if (!(length > 0.0) || !std::isfinite(length)) throw UsageError("uniform_grid: length must be > 0");
  std::vector<double> grid(static_cast<std::size_t>(grid_size));
  const double last = grid_size - 1;
  for (int k = 0; k < grid_size; ++k) grid[static_cast<std::size_t>(k)] = length * (k / last);
  grid.back() = length;
  return grid;
}

ErrorReport max_abs_error(const InterpolantCoeffs& coeffs, const ScalarFn& exact, double length,
                          int grid_size) {
  double worst = 0.0;
  for (double x : uniform_grid(length, grid_size)) {
    const double err = std::fabs(eval_interpolant(coeffs, x) - exact(x));
    if (std::isnan(err)) throw DomainError("max_abs_error: NaN error at x = " + std::to_string(x));
    worst = std::max(worst, err);
  }
  return ErrorReport{coeffs.degree(), coeffs.params(), worst, grid_size, length};
}

}  // namespace vofl
