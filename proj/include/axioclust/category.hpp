#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "axioclust/dataset.hpp"
#include "axioclust/matrix.hpp"

namespace axioclust {

// Cognitive category representations. A cluster is described either by a
// prototype row, by its member objects, by a multinomial distribution over
// nodes, or by a Gaussian-style density around a prototype.

struct PrototypeModel {
  Matrix v;  // c x tau
};

struct ExemplarModel {
  std::vector<std::vector<std::size_t>> members;  // object indices per cluster
};

struct MultinomialModel {
  Matrix theta;               // c x n, rows sum to 1
  double m = 1.0;             // exponent used by the sample-weighted map
  std::vector<double> alpha;  // mixing weights; empty = unweighted map
};

struct GaussianModel {
  Matrix v;  // c x tau
  double sigma = 1.0;
  double kappa = 1.0;
  double beta = 1.0;
  double m = 1.0;
  std::vector<double> alpha;  // mixing weights; empty = unweighted map
};

using CategoryModel = std::variant<PrototypeModel, ExemplarModel, MultinomialModel, GaussianModel>;

std::size_t category_count(const CategoryModel& model);

// Componentwise (or set) equality of two category representations within tol.
bool categories_equal(const CategoryModel& model, std::size_t i, std::size_t j, double tol);

// Prototype rows when the model has them (Prototype or Gaussian variants).
const Matrix& model_prototypes(const CategoryModel& model);
bool model_has_prototypes(const CategoryModel& model);

enum class AffinityMode { similarity, dissimilarity };

std::string to_string(AffinityMode mode);

// Scores one object against one category. Product-form maps (multinomial,
// density, the alpha-weighted maps) expose the log of the similarity;
// log is monotone, so arg-optima and the axiom checks are unaffected.
struct AffinityMap {
  AffinityMode mode = AffinityMode::similarity;
  bool log_domain = false;
  std::string name;
  std::function<double(const DataSet&, const CategoryModel&, std::size_t i, std::size_t k)> eval;

  static AffinityMap sq_euclidean();          // Ds = |x_k - v_i|^2
  static AffinityMap max_link();              // Sim = max_{l in X_i} s_kl
  static AffinityMap gaussian();              // Sim = exp(-beta^{-1} |x_k - v_i|^2)
  static AffinityMap density();               // log Sim = log kappa - |x_k - v_i|^2 / sigma
  static AffinityMap multinomial();           // log Sim = sum_l A_kl log theta_il
  static AffinityMap weighted_gaussian();     // log Sim = log alpha_i - |x_k - v_i|^2 / (m beta)
  static AffinityMap weighted_multinomial();  // log Sim = log alpha_i + sum_l (A_kl / m) log theta_il
  static AffinityMap by_name(const std::string& name);
};

// Memoized Sim/Ds evaluations: entry (i, k) scores object k against
// category i.
struct AffinityTable {
  Matrix t;  // c x n
  AffinityMode mode = AffinityMode::similarity;
  bool log_domain = false;

  std::size_t c() const { return t.rows(); }
  std::size_t n() const { return t.cols(); }
  bool maximize() const { return mode == AffinityMode::similarity; }
};

// Evaluates the map over all (category, object) pairs. Columns are
// independent, so the OpenMP version is bitwise identical to the serial one.
AffinityTable affinity_table(const DataSet& data, const CategoryModel& model,
                             const AffinityMap& map);
AffinityTable affinity_table_serial(const DataSet& data, const CategoryModel& model,
                                    const AffinityMap& map);

}  // namespace axioclust
