#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "survlime/blackbox.hpp"
#include "survlime/rng.hpp"
#include "survlime/types.hpp"

namespace survlime {

struct ExplainConfig {
  int n_points = 1000;     // N, query point included
  double radius = 0.5;     // perturbation ball radius r
  double epsilon = 1e-8;   // CHF clamp before logarithms
  double ln_clamp = 1e-6;  // floor on |ln H| in the straightening weights
  double ridge = 1e-9;     // relative jitter for the normal equations
  std::uint64_t seed = 0;
};

// Weighted linear least squares min_b sum_k W_k (y_k - b^T x_k)^2 + constant.
// Row k collapses one perturbation point's interval sum; the objective equals
// the full double-sum objective at every b.
struct QuadraticProblem {
  std::vector<std::vector<double>> rows;  // x_k
  std::vector<double> targets;            // y_k
  std::vector<double> weights;            // W_k >= 0
  double constant = 0.0;

  double objective(std::span<const double> b) const;
};

struct PointDiagnostics {
  std::vector<double> point;  // x_k
  double weight = 0.0;        // proximity weight w_k
  double residual = 0.0;      // y_k - b_expl^T x_k
};

struct Explanation {
  std::vector<double> coefficients;  // b_expl
  StepFunction surrogate_chf;        // H_0 * exp(b_expl^T x) at the query
  StepFunction blackbox_chf;         // black-box CHF at the query
  double objective_value = 0.0;
  std::vector<PointDiagnostics> per_point;
};

// `count` points uniform in the closed ball of `radius` around `center`
// (normalized Gaussian direction, U^{1/d} radial law).
std::vector<std::vector<double>> sample_ball(std::span<const double> center,
                                             double radius, int count,
                                             Rng& rng);
std::vector<std::vector<double>> sample_ball(std::span<const double> center,
                                             double radius, int count,
                                             std::uint64_t seed);

// Kernel weight 1 - sqrt(||x - x_k|| / r), floored at 0.
double proximity_weight(std::span<const double> x, std::span<const double> x_k,
                        double r);

// Straightening weights v_j = H_j / ln(H_j); |ln| floored at ln_clamp with
// sign preserved (v enters the objective squared).
std::vector<double> curvature_weights(std::span<const double> chf_values,
                                      double ln_clamp);

// Reduces the weighted log-distance objective to one least-squares row per
// point. All CHF and baseline values must already be clamped to > 0. Throws
// DegenerateProblemError when every aggregate weight vanishes.
QuadraticProblem assemble_problem(
    const std::vector<std::vector<double>>& points,
    std::span<const double> prox_weights,
    const std::vector<std::vector<double>>& chf_matrix,
    std::span<const double> baseline_values, const TimeGrid& grid,
    double ln_clamp);

// Normal equations with jitter ridge * trace(X^T W X) / d. Throws
// SingularityError when the solve fails even with the jitter.
std::vector<double> solve_wls(const QuadraticProblem& problem, double ridge);

// The full explanation pipeline at query point x: sample n_points - 1 ball
// points (x is the last point), query the black box, weight, assemble, solve.
// Deterministic per config.seed and thread count. The baseline carries the
// grid; it must match the black box's grid.
Explanation explain(const SurvivalBlackBox& blackbox, std::span<const double> x,
                    const StepFunction& baseline, const ExplainConfig& config);

}  // namespace survlime
