#pragma once

#include <stdexcept>
#include <string>

namespace vofl {

/// Argument outside the mathematical domain of an operation (Γ pole, order
/// out of bounds, negative abscissa, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed call: mismatched lengths, invalid sizes, inconsistent problem data.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical failure inside a solver (non-convergence, singular system).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vofl
