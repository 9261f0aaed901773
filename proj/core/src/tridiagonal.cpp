#include "vofl/detail/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "vofl/errors.hpp"

namespace vofl::detail {

TridiagonalEigen tridiagonal_eigen(std::vector<double> diag, std::vector<double> off,
                                   int max_sweeps) {
  const std::size_t n = diag.size();
  if (n == 0 || off.size() + 1 != n) {
    throw UsageError("tridiagonal_eigen: need n >= 1 diagonal entries and n-1 off-diagonal");
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  std::vector<double>& d = diag;
  std::vector<double> e(n, 0.0);  // e[i] couples rows i and i+1
  std::copy(off.begin(), off.end(), e.begin());
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;

  for (std::size_t l = 0; l < n; ++l) {
    int sweeps = 0;
    while (true) {
      std::size_t m = l;
      for (; m + 1 < n; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++sweeps > max_sweeps) {
        throw SolverError("tridiagonal_eigen: no convergence for eigenvalue " +
                          std::to_string(l) + " after " + std::to_string(max_sweeps) +
                          " sweeps (residual off-diagonal " + std::to_string(e[l]) + ")");
      }
      // Wilkinson-style shift from the leading 2x2 block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool deflated = false;
      for (std::size_t ii = m; ii-- > l;) {
        const double f = s * e[ii];
        const double b = c * e[ii];
        r = std::hypot(f, g);
        e[ii + 1] = r;
        if (r == 0.0) {
          d[ii + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[ii + 1] - p;
        r = (d[ii] - g) * s + 2.0 * c * b;
        p = s * r;
        d[ii + 1] = g + p;
        g = c * r - b;
        const double zf = z[ii + 1];
        z[ii + 1] = s * z[ii] + c * zf;
        z[ii] = c * z[ii] - s * zf;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  TridiagonalEigen out;
  out.values.reserve(n);
  out.first_components.reserve(n);
  for (std::size_t k : order) {
    out.values.push_back(d[k]);
    out.first_components.push_back(z[k]);
  }
  return out;
}

}  // namespace vofl::detail
