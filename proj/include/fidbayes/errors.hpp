#pragma once

#include <stdexcept>
#include <string>

namespace fidbayes {

/// Bad input: out-of-range parameters, malformed grids, infeasible model
/// settings. The CLI maps these to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested (lambda, theta0, sigma0, interval) cannot be written in the
/// bumped spike-slab form with a nonnegative bump coefficient.
class InfeasiblePriorError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// No nonnegative tau makes the stitched post-data density continuous;
/// lambda is too small for the interval and data at hand.
class ContinuityError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A numerical routine failed. The CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadratureError : public NumericalError {
 public:
  QuadratureError(const std::string& what, double estimate, double abs_error)
      : NumericalError(what), estimate_(estimate), abs_error_(abs_error) {}

  /// Best estimate reached before giving up.
  double estimate() const noexcept { return estimate_; }
  double abs_error() const noexcept { return abs_error_; }

 private:
  double estimate_;
  double abs_error_;
};

class BracketError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace fidbayes
