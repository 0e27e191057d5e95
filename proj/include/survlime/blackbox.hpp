#pragma once

#include <memory>
#include <span>
#include <vector>

#include "survlime/types.hpp"

namespace survlime {

// A fitted survival model reduced to its one externally visible capability:
// mapping a covariate vector to a CHF on a fixed grid. Implementations are
// immutable after fitting and safe for concurrent predict calls.
class SurvivalBlackBox {
 public:
  virtual ~SurvivalBlackBox() = default;

  // CHF at x; values clamped to >= kChfEpsilon, non-decreasing.
  virtual StepFunction predict_chf(std::span<const double> x) const = 0;

  virtual std::shared_ptr<const TimeGrid> grid_ptr() const = 0;
};

// CHF interval values for a batch of query points (OpenMP kernel).
std::vector<std::vector<double>> predict_chf_values_batch(
    const SurvivalBlackBox& blackbox,
    const std::vector<std::vector<double>>& points);

// Serial reference for predict_chf_values_batch.
std::vector<std::vector<double>> predict_chf_values_batch_serial(
    const SurvivalBlackBox& blackbox,
    const std::vector<std::vector<double>>& points);

}  // namespace survlime
