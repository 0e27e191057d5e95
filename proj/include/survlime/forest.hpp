#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "survlime/blackbox.hpp"
#include "survlime/types.hpp"

namespace survlime {

struct ForestConfig {
  int n_trees = 250;
  int mtry = 0;             // 0 -> ceil(sqrt(d))
  int min_leaf_events = 3;  // events required on each side of a split
  int max_depth = -1;       // -1 unbounded; 0 makes the root a leaf
  std::uint64_t seed = 0;
};

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  int leaf = -1;  // index into leaf CHF table
};

// Binary survival tree with log-rank splits and Nelson-Aalen leaf CHFs on the
// forest's shared grid.
class SurvivalTree {
 public:
  SurvivalTree(std::vector<TreeNode> nodes,
               std::vector<std::vector<double>> leaf_values,
               std::vector<std::size_t> in_bag);

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const std::vector<std::vector<double>>& leaf_values() const {
    return leaf_values_;
  }
  // Bootstrap sample indices the tree was grown on (kept in memory only).
  const std::vector<std::size_t>& in_bag() const { return in_bag_; }

  std::span<const double> leaf_chf(std::span<const double> x) const;

 private:
  std::vector<TreeNode> nodes_;
  std::vector<std::vector<double>> leaf_values_;
  std::vector<std::size_t> in_bag_;
};

class SurvivalForest : public SurvivalBlackBox {
 public:
  SurvivalForest(std::vector<SurvivalTree> trees,
                 std::shared_ptr<const TimeGrid> grid, ForestConfig config);

  const std::vector<SurvivalTree>& trees() const { return trees_; }
  const ForestConfig& config() const { return config_; }

  // Mean of the per-tree leaf CHFs reached by x, clamped to >= kChfEpsilon.
  StepFunction predict_chf(std::span<const double> x) const override;
  std::shared_ptr<const TimeGrid> grid_ptr() const override { return grid_; }

 private:
  std::vector<SurvivalTree> trees_;
  std::shared_ptr<const TimeGrid> grid_;
  ForestConfig config_;
};

// Two-sample log-rank statistic (observed minus expected over the root of the
// hypergeometric variance). Antisymmetric under group swap; 0 when the
// variance degenerates.
double log_rank_statistic(const Dataset& left, const Dataset& right);

struct SplitCandidate {
  int feature = -1;
  double threshold = 0.0;
  double statistic = 0.0;  // |log-rank| of the chosen split

  bool valid() const { return feature >= 0; }
};

// Best (feature, threshold) among midpoints of consecutive distinct values,
// scored by |log-rank|, requiring min_leaf_events events on both sides.
// sample_rows may contain repeats (bootstrap multiplicity). Exposed so the
// incremental search can be checked against the log_rank_statistic oracle.
SplitCandidate pick_best_split(const Dataset& dataset,
                               std::span<const std::size_t> sample_rows,
                               std::span<const int> features,
                               const TimeGrid& grid, int min_leaf_events);

// Trains config.n_trees trees on bootstrap resamples (OpenMP kernel over
// trees). Per-tree RNG streams derive from (seed, tree index), so the result
// is identical for any thread count.
SurvivalForest fit_forest(const Dataset& dataset, const ForestConfig& config);

// Serial reference for fit_forest.
SurvivalForest fit_forest_serial(const Dataset& dataset,
                                 const ForestConfig& config);

StepFunction forest_predict_chf(const SurvivalForest& forest,
                                std::span<const double> x);

}  // namespace survlime
