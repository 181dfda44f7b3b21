#pragma once

#include <stdexcept>

namespace hitloc {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative method (series, continued fraction, adaptive quadrature) ran
/// out of budget before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Path simulation hit its step cap on too many paths.
class NonTerminationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hitloc
