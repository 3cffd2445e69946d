#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "axioclust/axioms.hpp"

namespace axioclust {

enum class InitScheme { random_partition, sample_distinct_objects };

struct AlgoConfig {
  std::size_t c = 2;
  std::size_t max_iterations = 300;  // IT
  double epsilon = 1e-9;             // convergence test on |delta objective|
  std::uint64_t seed = 0;
  InitScheme init = InitScheme::sample_distinct_objects;
  // Algorithm-specific free parameters.
  double m = 2.0;
  double beta = 1.0;
  double sigma = 1.0;
  double kappa = 1.0;
};

// Alternating-optimization framework: from an initial partition, repeat
// model-from-partition then partition-from-model until the objective change
// drops to epsilon or IT sweeps have run. The objective is recorded after
// every full sweep; equivalency of the final U against the final model's
// affinity table is evaluated and stored on the result (degenerate inputs,
// e.g. all-identical objects, can leave it false).
struct FrameworkSteps {
  std::function<void(const Partition&)> update_model;
  std::function<Partition()> update_partition;
  std::function<double(const Partition&)> objective;
  std::function<CategoryModel()> snapshot_model;
  AffinityMap affinity;
  // Optional hook to copy algorithm-specific state onto the result.
  std::function<void(ClusteringResult&)> finalize;
};

ClusteringResult run_framework(std::shared_ptr<const DataSet> data, const AlgoConfig& cfg,
                               Partition initial, FrameworkSteps steps);

// Agglomerative single linkage: start from n singletons and perform n - c
// merges of the globally most-similar cluster pair under max-link
// similarity. Ties merge the lexicographically smallest pair. The trace
// records the merged similarity per step.
ClusteringResult single_linkage(std::shared_ptr<const DataSet> data, std::size_t c);

// Hard C-means: cluster means alternating with nearest-prototype assignment;
// objective SSE, non-increasing. An emptied cluster is re-seeded with the
// point farthest from its nearest prototype.
ClusteringResult c_means(std::shared_ptr<const DataSet> data, const AlgoConfig& cfg);

// Fuzzy C-means with the classical updates (m > 1); objective
// sum u^m |x - v|^2, non-increasing; columns of U sum to 1.
ClusteringResult fuzzy_c_means(std::shared_ptr<const DataSet> data, const AlgoConfig& cfg);

// Hard-assignment EM on p = kappa exp(-|x - v|^2 / sigma); log-likelihood
// non-decreasing. With fixed kappa and sigma the label trajectory coincides
// with c_means from the same seed.
ClusteringResult cml_gaussian(std::shared_ptr<const DataSet> data, const AlgoConfig& cfg);

// Sample-weighted Gaussian mixture ascent on
//   sum_k (sum_i alpha_i exp(-(m beta)^{-1} |x_k - v_i|^2))^m.
// Per sweep: memberships u, then v and alpha weighted by the sample weights
// a_k from the previous sweep (a = 1 on the first sweep), then a refreshed
// from the new model. Everything product-shaped runs in log domain.
ClusteringResult sample_weighted_gaussian(std::shared_ptr<const DataSet> data,
                                          const AlgoConfig& cfg);

// Adjacency-view counterpart on
//   sum_k (sum_i alpha_i prod_l theta_il^{A_kl / m})^m.
// Rejects datasets with isolated nodes (d_k = 0).
ClusteringResult sample_weighted_multinomial(std::shared_ptr<const DataSet> data,
                                             const AlgoConfig& cfg);

// Dispatch by CLI name.
ClusteringResult run_algorithm(const std::string& name, std::shared_ptr<const DataSet> data,
                               const AlgoConfig& cfg);
bool algorithm_known(const std::string& name);

}  // namespace axioclust
