#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "survlime/cox.hpp"
#include "survlime/explainer.hpp"
#include "survlime/forest.hpp"
#include "survlime/synthgen.hpp"
#include "survlime/types.hpp"

namespace survlime {

// sqrt( (1/n) sum_i ||b_i^model - b_i^expl||_2 ); the norm enters unsquared.
double rmse_model(const std::vector<std::vector<double>>& b_model,
                  const std::vector<std::vector<double>>& b_expl);

// rmse_model with a single reference vector broadcast over the list.
double rmse_true(std::span<const double> b_true,
                 const std::vector<std::vector<double>>& b_expl);

// Classic root-mean-square variants: sqrt( (1/n) sum_i ||diff_i||^2 ). The
// papers' tables live on this scale; reports carry both.
double rmse_model_classic(const std::vector<std::vector<double>>& b_model,
                          const std::vector<std::vector<double>>& b_expl);
double rmse_true_classic(std::span<const double> b_true,
                         const std::vector<std::vector<double>>& b_expl);

// sqrt( (1/n) sum_i sum_{j in J} (H_i[j] - H_i^surrogate[j])^2 ).
double rmse_approx(const std::vector<std::vector<double>>& blackbox_chfs,
                   const std::vector<std::vector<double>>& surrogate_chfs,
                   std::span<const std::size_t> time_indices);

// (argmin, closest-to-average, argmax) of the per-point distances; ties break
// toward the lowest index.
std::tuple<std::size_t, std::size_t, std::size_t> select_best_mean_worst(
    std::span<const double> distances);

enum class BlackBoxKind { kCox, kForest };

struct ExperimentScenario {
  BlackBoxKind kind = BlackBoxKind::kCox;
  std::vector<int> train_clusters = {0};
  int test_cluster = 0;
  int train_size = 900;  // per training cluster
  int test_size = 100;
  ExplainConfig explain;  // per-point seeds derive from the experiment seed
  ForestConfig forest;
  CoxFitConfig cox;
};

struct PointRecord {
  std::vector<double> x;
  std::vector<double> b_expl;
  double distance = 0.0;  // ||b_expl - b_model|| (Cox) or CHF L2 (forest)
  std::vector<double> blackbox_chf;
  std::vector<double> surrogate_chf;
};

struct ExperimentReport {
  ExperimentScenario scenario;
  std::uint64_t seed = 0;
  std::vector<std::string> feature_names;
  std::vector<double> grid_times;
  std::vector<PointRecord> points;
  std::vector<double> b_model;  // empty for a forest black box
  std::vector<double> b_true;   // generator coefficients of the test cluster
  double c_index = 0.0;
  double rmse_model_value = 0.0;
  double rmse_true_value = 0.0;
  double rmse_model_classic_value = 0.0;
  double rmse_true_classic_value = 0.0;
  double rmse_approx_value = 0.0;
  std::size_t best_index = 0;
  std::size_t mean_index = 0;
  std::size_t worst_index = 0;
};

// Explanations for a batch of query points (OpenMP kernel over points);
// point i uses seed derive_stream(base.seed, i).
std::vector<Explanation> explain_batch(const SurvivalBlackBox& blackbox,
                                       const std::vector<std::vector<double>>& points,
                                       const StepFunction& baseline,
                                       const ExplainConfig& base);

// Serial reference for explain_batch.
std::vector<Explanation> explain_batch_serial(
    const SurvivalBlackBox& blackbox,
    const std::vector<std::vector<double>>& points,
    const StepFunction& baseline, const ExplainConfig& base);

// Generates the paper clusters, splits train/test by a seeded shuffle, trains
// the black box, explains every test point and aggregates all measures.
ExperimentReport run_experiment(const ExperimentScenario& scenario,
                                std::uint64_t seed);

}  // namespace survlime
