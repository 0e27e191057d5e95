#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace survlime {

// Data/schema problems (CLI exit code 2).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failures: non-convergence, separation, singular systems (CLI exit code 3).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, std::vector<double> last)
      : NumericalError(what), last_iterate(std::move(last)) {}

  std::vector<double> last_iterate;
};

class SeparationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DegenerateProblemError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace survlime
