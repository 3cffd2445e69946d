#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "axioclust/axioms.hpp"

namespace axioclust {

// phi: object index -> category index.
using AssignmentMap = std::vector<std::size_t>;

// Convex/concave function pair with f(g(t)) = t on the positive reals.
// Built-in power family: convex side f = t^m, g = t^(1/m); concave side
// f = t^(1/m), g = t^m, with m >= 1.
struct ConvexPair {
  double m = 1.0;
  bool convex = true;

  double f(double t) const;
  double g(double t) const;

  static ConvexPair power(double m, bool convex);
};

// Inequality evaluators over an affinity table. `phi` selects one category
// per object; `labels` plays the role of the membership argmax map. All
// products run as log-sums; sums run serially left to right so repeated
// evaluations are bit-identical.
double sum_along(const AffinityTable& t, const AssignmentMap& phi);
double log_prod_along(const AffinityTable& t, const AssignmentMap& phi);
double log_prod_mixture(const AffinityTable& t, const std::vector<double>& alpha);
double general_means_sum(const AffinityTable& t, const std::vector<double>& alpha,
                         const ConvexPair& pair);
double log_prod_general_means(const AffinityTable& t, const std::vector<double>& alpha,
                              const ConvexPair& pair);

struct TheoremViolation {
  int inequality = 0;       // 2..5 (similarity) or 12..15 (dissimilarity)
  long long trial = -1;     // -1 for the exhaustive sweep
  std::uint64_t trial_seed = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double breach = 0.0;      // positive amount by which the inequality failed
  std::string domain;       // "log" or "linear"
  AssignmentMap phi;        // offending map where applicable
};

struct TheoremReport {
  int theorem = 4;
  bool precondition_met = false;
  std::string note;
  std::size_t trials = 0;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::size_t checks = 0;
  double max_breach = 0.0;
  std::vector<TheoremViolation> violations;
};

// Verifies the four similarity-side inequalities on a clustering result:
// the products/sums along the membership argmax map dominate those along
// any other assignment map, the mixture product, and the general-means sum.
// Random (phi, alpha, m) draws use per-trial RNG streams derived from
// (seed, trial), so parallel and serial runs produce identical reports;
// when c^n <= 4096 every assignment map is also enumerated. If the result
// is not proper or equivalency fails, the report says so and any breaches
// found are demonstrations rather than theorem violations.
TheoremReport verify_thm4(const ClusteringResult& result, std::size_t trials,
                          std::uint64_t seed, bool parallel = true);

// Dissimilarity-side counterpart (<= direction, concave pairs).
TheoremReport verify_thm5(const ClusteringResult& result, std::size_t trials,
                          std::uint64_t seed, bool parallel = true);

enum class GeneratorKind { gaussian_prototype, multinomial };

// Random desk-scale instance. The partition is drawn consistent with the
// affinity table about half the time; the rest are deliberate mismatches
// so the axiom gate has something to filter.
struct GeneratedInstance {
  std::shared_ptr<const DataSet> data;
  ClusteringResult similarity_result;
  std::optional<ClusteringResult> dissimilarity_result;
  std::uint64_t seed = 0;
  bool axioms_hold = false;  // proper + equivalency at the generation tolerance
};

GeneratedInstance generate_instance(GeneratorKind kind, std::uint64_t seed,
                                    std::size_t n_max = 8, std::size_t c_max = 3,
                                    double axiom_tol = kTieTol);

struct CounterexampleSearch {
  std::optional<GeneratedInstance> hit;
  std::optional<TheoremViolation> violation;
  std::size_t tested = 0;      // instances generated
  std::size_t verified = 0;    // instances that passed the axiom gate
};

// Draws up to `budget` instances; instances whose axioms hold (at axiom_tol)
// get their Theorem 4/5 inequalities checked. Returns the first instance
// breaching any inequality by more than the slack — any hit is a bug.
CounterexampleSearch search_counterexample(GeneratorKind kind, std::size_t budget,
                                           std::uint64_t seed, double axiom_tol = kTieTol,
                                           std::size_t trials_per_instance = 8);

}  // namespace axioclust
