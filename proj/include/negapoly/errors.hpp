#pragma once

#include <stdexcept>
#include <string>

namespace negapoly {

/// Argument outside the mathematical domain of an operation (q <= 0, nu <= 1, NaN input).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation requested at (or numerically too close to) the pole z = 1.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Integer index or selector out of its admissible range.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The adaptive integrator ran out of panels before reaching the requested
/// tolerance. Carries the best estimate obtained so far.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double best_value, double best_error)
      : std::runtime_error(what), best_value_(best_value), best_error_(best_error) {}

  double best_value() const noexcept { return best_value_; }
  double best_error() const noexcept { return best_error_; }

 private:
  double best_value_;
  double best_error_;
};

/// A closed form was requested for an integral family that has none
/// (T with odd index, L with even index).
class NoClosedFormError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace negapoly
