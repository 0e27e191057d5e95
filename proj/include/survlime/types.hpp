#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "survlime/errors.hpp"

namespace survlime {

// Lower clamp applied to CHF interval values so logarithms stay defined.
inline constexpr double kChfEpsilon = 1e-8;

// One observation: covariate vector, observed time, event indicator
// (1 = event, 0 = censored).
struct Sample {
  std::vector<double> covariates;
  double time = 0.0;
  int event = 0;
};

// Immutable collection of samples sharing one covariate dimension.
class Dataset {
 public:
  Dataset(std::vector<Sample> samples, std::vector<std::string> feature_names);

  std::size_t size() const { return samples_.size(); }
  std::size_t dim() const { return feature_names_.size(); }
  const Sample& operator[](std::size_t i) const { return samples_[i]; }
  const std::vector<Sample>& samples() const { return samples_; }
  const std::vector<std::string>& feature_names() const {
    return feature_names_;
  }
  std::size_t event_count() const { return event_count_; }

  auto begin() const { return samples_.begin(); }
  auto end() const { return samples_.end(); }

 private:
  std::vector<Sample> samples_;
  std::vector<std::string> feature_names_;
  std::size_t event_count_ = 0;
};

// Partition of the study window [t_0, t_m + gamma] at the distinct event
// times t_0 < ... < t_m. Interval j covers [t_j, t_{j+1}); the last interval
// has width gamma.
class TimeGrid {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  TimeGrid(std::vector<double> event_times, double gamma);

  const std::vector<double>& event_times() const { return event_times_; }
  double gamma() const { return gamma_; }
  double horizon() const { return event_times_.back() + gamma_; }
  std::size_t intervals() const { return event_times_.size(); }

  // Width of interval j.
  double width(std::size_t j) const;

  // Index of the interval containing t; npos when t precedes the first event
  // time. Times at or past the horizon map to the last interval.
  std::size_t interval_of(double t) const;

  // First interval whose start time is >= t (right-continuous event binning);
  // npos when t lies beyond the last event time.
  std::size_t first_interval_at_or_after(double t) const;

  bool operator==(const TimeGrid& other) const = default;

 private:
  std::vector<double> event_times_;
  double gamma_;
};

enum class StepKind { kChf, kSurvival };

// Piecewise-constant function on a TimeGrid. CHFs are non-negative and
// non-decreasing; survival curves lie in (0, 1] and are non-increasing.
// Immutable; shares the grid.
class StepFunction {
 public:
  StepFunction(std::shared_ptr<const TimeGrid> grid, std::vector<double> values,
               StepKind kind);

  const TimeGrid& grid() const { return *grid_; }
  const std::shared_ptr<const TimeGrid>& grid_ptr() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double value(std::size_t j) const { return values_[j]; }
  StepKind kind() const { return kind_; }

  // Value at time t. Before the first event time a CHF is 0 and a survival
  // curve is 1; past the horizon the last value is held.
  double at(double t) const;

 private:
  std::shared_ptr<const TimeGrid> grid_;
  std::vector<double> values_;
  StepKind kind_;
};

}  // namespace survlime
