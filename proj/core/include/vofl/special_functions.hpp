#pragma once

namespace vofl {

/// ln Γ(x) for finite x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// Γ(a)/Γ(b) evaluated without forming either gamma value when that would
/// overflow. Both arguments must be finite and positive.
double gamma_ratio(double a, double b);

/// 1/Γ(x) for x > 0; underflows gracefully to 0 for large x.
double reciprocal_gamma(double x);

/// Regularized lower incomplete gamma P(s, x) = γ(s, x)/Γ(s), s > 0, x >= 0.
double reg_lower_incomplete_gamma(double s, double x);

}  // namespace vofl
