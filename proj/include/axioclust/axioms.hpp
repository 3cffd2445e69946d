#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "axioclust/category.hpp"
#include "axioclust/partition.hpp"

namespace axioclust {

struct SampleSeparationReport {
  bool holds = true;
  std::vector<std::size_t> violating_objects;  // columns without a strict optimum
};

struct CategorySeparationReport {
  bool holds = true;
  std::vector<std::size_t> violating_clusters;           // rows without a witness
  std::vector<std::optional<std::size_t>> witnesses;     // per-cluster witness object
};

struct EquivalencyReport {
  bool holds = true;
  std::vector<std::size_t> mismatched_columns;
};

// Sample separation: every object has a strictly best category, i.e. for
// every column some row beats all others by more than tol (max for
// similarity tables, min for dissimilarity tables).
SampleSeparationReport check_sample_separation(const AffinityTable& t, double tol = kTieTol);

// Category separation: every category strictly wins on at least one object.
// Witnesses are necessarily distinct objects (one strict winner per column).
CategorySeparationReport check_category_separation(const AffinityTable& t, double tol = kTieTol);

// For every object, the argmax set of its membership column equals the
// arg-optimum set of its affinity column (set equality under tol ties).
EquivalencyReport check_categorization_equivalency(const Partition& u, const AffinityTable& t,
                                                   double tol = kTieTol);

// Objects whose arg-optimum over categories is not unique. Empty exactly
// when sample separation holds.
std::vector<std::size_t> boundary_set(const AffinityTable& t, double tol = kTieTol);

enum class ResultClass { proper, overlapping, improper };

std::string to_string(ResultClass cls);

// The triple (model, U, affinity) plus run metadata.
struct ClusteringResult {
  CategoryModel model;
  Partition partition;
  AffinityMap affinity;
  std::shared_ptr<const DataSet> data;

  std::vector<double> trace;  // objective after every full sweep
  std::vector<std::vector<std::size_t>> label_trace;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  bool converged = false;
  std::string update_order;  // how the alternating steps were sequenced

  // Extra state returned by the sample-weighted algorithms.
  std::vector<double> sample_weights;      // a_k at the final model
  std::vector<double> log_sample_weights;  // log a_k (exact even when a underflows)

  // Running per-sweep constraint drift, recorded during iteration.
  double max_alpha_simplex_err = 0.0;
  double max_u_colsum_err = 0.0;
  double max_row_stochastic_err = 0.0;

  // Equivalency of the returned U against the returned model's affinity
  // table, evaluated once at exit. Degenerate runs (e.g. all-identical
  // objects) can legitimately leave this false.
  bool exit_equivalency = true;

  AffinityTable table() const { return affinity_table(*data, model, affinity); }
};

struct ResultClassReport {
  ResultClass cls = ResultClass::proper;
  bool coincident = false;
  bool totally_coincident = false;
  SampleSeparationReport sample;
  CategorySeparationReport category;
  EquivalencyReport equivalency;
  std::vector<std::size_t> boundary;
};

// Proper = both separation axioms hold; overlapping = category separation
// only; improper = category separation fails. Coincident flags compare the
// category representations themselves.
ResultClassReport classify_clustering_result(const ClusteringResult& result,
                                             double tol = kTieTol);

// Same classification when the table is already at hand (avoids a re-eval).
ResultClassReport classify_clustering_result(const ClusteringResult& result,
                                             const AffinityTable& table, double tol = kTieTol);

}  // namespace axioclust
