#pragma once

#include <memory>
#include <span>

#include "survlime/types.hpp"

namespace survlime {

// Grid of distinct event times. gamma = gamma_rel * t_m pads the last
// interval. Throws DataError when the dataset has no uncensored sample.
std::shared_ptr<const TimeGrid> build_time_grid(const Dataset& dataset,
                                                double gamma_rel = 1e-6);

// Nelson-Aalen cumulative hazard estimate of `dataset` on `grid`: the value on
// interval j is sum_{event times tau <= t_j} d(tau) / n_at_risk(tau). Event
// times that fall between grid points contribute at the next grid time.
StepFunction nelson_aalen(const Dataset& dataset,
                          std::shared_ptr<const TimeGrid> grid);

// S = exp(-H).
StepFunction chf_to_survival(const StepFunction& chf);

// Integral over the study window: sum_j value_j * width_j.
double integrate_step(const StepFunction& f);

// Harrell's C-index. A pair is comparable iff the earlier time is an event;
// higher score must predict shorter survival; score ties count 0.5. Throws
// DataError when no pair is comparable. Parallel pair count with integer
// reduction, so the result is exact and thread-count independent.
double concordance_index(std::span<const double> risk_scores,
                         const Dataset& dataset);

// Serial reference for concordance_index.
double concordance_index_serial(std::span<const double> risk_scores,
                                const Dataset& dataset);

}  // namespace survlime
