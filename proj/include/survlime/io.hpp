#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "survlime/cox.hpp"
#include "survlime/evalbench.hpp"
#include "survlime/explainer.hpp"
#include "survlime/forest.hpp"
#include "survlime/synthgen.hpp"
#include "survlime/types.hpp"

namespace survlime {

// Dataset CSV: header row, reserved columns `time` and `event`, every other
// column a feature. A schema JSON (column -> category list) declares
// categorical columns, expanded one-hot into features named "col=cat".
// Errors are addressed by row and column.
Dataset read_dataset_csv(const std::string& path,
                         const std::string& schema_path = "");
Dataset parse_dataset_csv(const std::string& text,
                          const std::string& schema_text = "");
void write_dataset_csv(const Dataset& dataset, const std::string& path);

// Ground-truth sidecar for generated data: per-cluster b_true, lambda, shape
// plus the per-row cluster assignment.
void write_synth_meta(const SynthData& data, const std::string& path);

// A serialized model: the fitted black box plus its feature names.
struct StoredModel {
  std::variant<CoxModel, SurvivalForest> model;
  std::vector<std::string> feature_names;

  const SurvivalBlackBox& blackbox() const;
};

nlohmann::json model_to_json(const StoredModel& stored);
StoredModel model_from_json(const nlohmann::json& j);
void save_model(const StoredModel& stored, const std::string& path);
StoredModel load_model(const std::string& path);

nlohmann::json explanation_to_json(const Explanation& expl,
                                   std::span<const double> query_point,
                                   const std::vector<std::string>& feature_names);

// Plot-ready paired survival curves: time, blackbox survival, surrogate
// survival.
void write_explanation_curves_csv(const Explanation& expl,
                                  const std::string& path);

nlohmann::json report_summary_json(const ExperimentReport& report);

// Full report bundle under `dir`: <tag>_summary.json, <tag>_points.csv,
// then feature-importance and survival-curve CSVs for the best, mean and
// worst test points.
void write_experiment_report(const ExperimentReport& report,
                             const std::string& dir, const std::string& tag);

std::string format_double(double v);  // 17 significant digits

}  // namespace survlime
