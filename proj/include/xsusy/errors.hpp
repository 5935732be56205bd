#pragma once

#include <stdexcept>
#include <string>

namespace xsusy {

/// Argument outside the admissible set (parameter ranges, poles, singular points).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A polynomial solution of a family ODE could not be assembled.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is structurally valid but degenerate (zero norm, empty table, ...).
class DegenerateInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Iterative numerics that did not reach tolerance. Carries the best estimate.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}

  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

}  // namespace xsusy
