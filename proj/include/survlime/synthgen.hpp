#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "survlime/rng.hpp"
#include "survlime/types.hpp"

namespace survlime {

// One covariate cluster with Cox-consistent Weibull event times.
struct ClusterSpec {
  std::vector<double> center;
  double radius = 8.0;
  int count = 1000;
  double lambda = 1e-5;  // Weibull scale
  double shape = 2.0;    // Weibull shape v
  std::vector<double> b_true;
  double event_prob = 0.9;  // Pr{delta = 1}
  double clip_time = 2000.0;
};

// The paper's two five-dimensional clusters.
std::vector<ClusterSpec> paper_cluster_specs();

// Ball radius from two cluster centers: ceil(||p0 - p1|| / 2) + 2.
double intersect_radius(std::span<const double> p0, std::span<const double> p1);

// Inverse-transform Weibull survival time T = (-ln u / (lambda e^{b^T x}))^{1/v},
// clipped at clip_time.
double weibull_time(std::span<const double> x, std::span<const double> b,
                    double lambda, double shape, double u,
                    double clip_time = std::numeric_limits<double>::infinity());

struct SynthData {
  Dataset dataset;
  std::vector<int> cluster_of;  // per-sample cluster index
  std::vector<ClusterSpec> specs;
  std::uint64_t seed = 0;
};

// Samples covariates uniformly in each cluster ball, draws times through
// weibull_time and events from Bernoulli(event_prob). Per-cluster RNG streams
// derive from (seed, cluster index); output is spec order then draw order.
SynthData generate_dataset(const std::vector<ClusterSpec>& specs,
                           std::uint64_t seed);

}  // namespace survlime
