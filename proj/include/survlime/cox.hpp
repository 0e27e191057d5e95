#pragma once

#include <memory>
#include <span>
#include <vector>

#include "survlime/blackbox.hpp"
#include "survlime/types.hpp"

namespace survlime {

struct CoxFitConfig {
  double tolerance = 1e-8;  // gradient-norm stopping rule
  int max_iterations = 100;
  int max_halvings = 20;
  bool standardize = false;  // fit on standardized covariates, report raw-scale b
};

// Proportional hazards model: H(t|x) = H_0(t) * exp(b^T x).
class CoxModel : public SurvivalBlackBox {
 public:
  CoxModel(std::vector<double> coefficients, StepFunction baseline_chf);

  const std::vector<double>& coefficients() const { return coefficients_; }
  const StepFunction& baseline_chf() const { return baseline_chf_; }

  StepFunction predict_chf(std::span<const double> x) const override;
  std::shared_ptr<const TimeGrid> grid_ptr() const override {
    return baseline_chf_.grid_ptr();
  }

 private:
  std::vector<double> coefficients_;
  StepFunction baseline_chf_;
};

// Breslow partial log-likelihood (tied event times share the full risk-set
// denominator).
double partial_log_likelihood(std::span<const double> b, const Dataset& dataset);

struct PllDerivatives {
  double value = 0.0;
  std::vector<double> gradient;  // length d
  std::vector<double> hessian;   // row-major d x d, negative semidefinite
};

PllDerivatives partial_log_likelihood_derivatives(std::span<const double> b,
                                                  const Dataset& dataset);

// Newton maximization with step halving. Requires at least one event and
// dim < number of events. Throws ConvergenceError after max_iterations,
// SeparationError on coefficient blow-up.
CoxModel fit_cox(const Dataset& dataset, const CoxFitConfig& config = {});

// Breslow baseline CHF at coefficient vector b; equals Nelson-Aalen at b = 0.
StepFunction breslow_baseline(const Dataset& dataset,
                              std::shared_ptr<const TimeGrid> grid,
                              std::span<const double> b);

StepFunction predict_chf(const CoxModel& model, std::span<const double> x);

// Linear risk score b^T x.
double predict_risk(const CoxModel& model, std::span<const double> x);

}  // namespace survlime
