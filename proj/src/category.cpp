#include "axioclust/category.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace axioclust {

std::size_t category_count(const CategoryModel& model) {
  return std::visit(
      [](const auto& m) -> std::size_t {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ExemplarModel>) {
          return m.members.size();
        } else if constexpr (std::is_same_v<T, MultinomialModel>) {
          return m.theta.rows();
        } else {
          return m.v.rows();
        }
      },
      model);
}

namespace {

bool rows_equal(const Matrix& m, std::size_t i, std::size_t j, double tol) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!nearly_equal(m(i, c), m(j, c), tol)) return false;
  }
  return true;
}

bool sets_equal(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

}  // namespace

bool categories_equal(const CategoryModel& model, std::size_t i, std::size_t j, double tol) {
  return std::visit(
      [&](const auto& m) -> bool {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ExemplarModel>) {
          return sets_equal(m.members[i], m.members[j]);
        } else if constexpr (std::is_same_v<T, MultinomialModel>) {
          return rows_equal(m.theta, i, j, tol);
        } else {
          return rows_equal(m.v, i, j, tol);
        }
      },
      model);
}

bool model_has_prototypes(const CategoryModel& model) {
  return std::holds_alternative<PrototypeModel>(model) ||
         std::holds_alternative<GaussianModel>(model);
}

const Matrix& model_prototypes(const CategoryModel& model) {
  if (const auto* p = std::get_if<PrototypeModel>(&model)) return p->v;
  if (const auto* g = std::get_if<GaussianModel>(&model)) return g->v;
  throw config_error("model has no prototype matrix");
}

std::string to_string(AffinityMode mode) {
  return mode == AffinityMode::similarity ? "similarity" : "dissimilarity";
}

namespace {

std::span<const double> prototype_row(const CategoryModel& model, std::size_t i) {
  return model_prototypes(model).row(i);
}

double sqdist_to_prototype(const DataSet& data, const CategoryModel& model, std::size_t i,
                           std::size_t k) {
  return squared_distance(data.features().row(k), prototype_row(model, i));
}

const GaussianModel& gaussian_of(const CategoryModel& model) {
  const auto* g = std::get_if<GaussianModel>(&model);
  if (!g) throw config_error("affinity map requires a Gaussian-like model");
  return *g;
}

const MultinomialModel& multinomial_of(const CategoryModel& model) {
  const auto* m = std::get_if<MultinomialModel>(&model);
  if (!m) throw config_error("affinity map requires a multinomial model");
  return *m;
}

double log_or_neg_inf(double v) {
  return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
}

// sum_l w_kl log theta_il with 0 * log 0 = 0.
double multinomial_log_sim(const DataSet& data, const Matrix& theta, std::size_t i,
                           std::size_t k, double exponent_scale) {
  const Matrix& adj = data.adjacency();
  double acc = 0.0;
  for (std::size_t l = 0; l < adj.cols(); ++l) {
    double w = adj(k, l);
    if (w == 0.0) continue;
    acc += w * log_or_neg_inf(theta(i, l));
  }
  return acc * exponent_scale;
}

double log_alpha(const std::vector<double>& alpha, std::size_t i) {
  if (alpha.empty()) throw config_error("weighted affinity map requires mixing weights alpha");
  return log_or_neg_inf(alpha[i]);
}

}  // namespace

AffinityMap AffinityMap::sq_euclidean() {
  AffinityMap map;
  map.mode = AffinityMode::dissimilarity;
  map.log_domain = false;
  map.name = "sq-euclidean";
  map.eval = [](const DataSet& d, const CategoryModel& m, std::size_t i, std::size_t k) {
    return sqdist_to_prototype(d, m, i, k);
  };
  return map;
}

AffinityMap AffinityMap::max_link() {
  AffinityMap map;
  map.mode = AffinityMode::similarity;
  map.log_domain = false;
  map.name = "max-link";
  map.eval = [](const DataSet& d, const CategoryModel& m, std::size_t i, std::size_t k) {
    const auto* ex = std::get_if<ExemplarModel>(&m);
    if (!ex) throw config_error("max-link affinity requires an exemplar model");
    const Matrix& s = d.similarity();
    if (ex->members[i].empty()) throw config_error("max-link affinity: empty member set");
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t l : ex->members[i]) best = std::max(best, s(k, l));
    return best;
  };
  return map;
}

AffinityMap AffinityMap::gaussian() {
  AffinityMap map;
  map.mode = AffinityMode::similarity;
  map.log_domain = false;
  map.name = "gaussian";
  map.eval = [](const DataSet& d, const CategoryModel& m, std::size_t i, std::size_t k) {
    const GaussianModel& g = gaussian_of(m);
    if (g.beta <= 0.0) throw std::domain_error("gaussian affinity requires beta > 0");
    return std::exp(-sqdist_to_prototype(d, m, i, k) / g.beta);
  };
  return map;
}

AffinityMap AffinityMap::density() {
  AffinityMap map;
  map.mode = AffinityMode::similarity;
  map.log_domain = true;
  map.name = "density";
  map.eval = [](const DataSet& d, const CategoryModel& m, std::size_t i, std::size_t k) {
    const GaussianModel& g = gaussian_of(m);
    if (g.sigma <= 0.0) throw std::domain_error("density affinity requires sigma > 0");
    return std::log(g.kappa) - sqdist_to_prototype(d, m, i, k) / g.sigma;
  };
  return map;
}

AffinityMap AffinityMap::multinomial() {
  AffinityMap map;
  map.mode = AffinityMode::similarity;
  map.log_domain = true;
  map.name = "multinomial";
  map.eval = [](const DataSet& d, const CategoryModel& m, std::size_t i, std::size_t k) {
    return multinomial_log_sim(d, multinomial_of(m).theta, i, k, 1.0);
  };
  return map;
}

AffinityMap AffinityMap::weighted_gaussian() {
  AffinityMap map;
  map.mode = AffinityMode::similarity;
  map.log_domain = true;
  map.name = "weighted-gaussian";
  map.eval = [](const DataSet& d, const CategoryModel& m, std::size_t i, std::size_t k) {
    const GaussianModel& g = gaussian_of(m);
    if (g.beta <= 0.0 || g.m < 1.0) {
      throw std::domain_error("weighted-gaussian affinity requires beta > 0 and m >= 1");
    }
    return log_alpha(g.alpha, i) - sqdist_to_prototype(d, m, i, k) / (g.m * g.beta);
  };
  return map;
}

AffinityMap AffinityMap::weighted_multinomial() {
  AffinityMap map;
  map.mode = AffinityMode::similarity;
  map.log_domain = true;
  map.name = "weighted-multinomial";
  map.eval = [](const DataSet& d, const CategoryModel& m, std::size_t i, std::size_t k) {
    const MultinomialModel& mm = multinomial_of(m);
    if (mm.m < 1.0) throw std::domain_error("weighted-multinomial affinity requires m >= 1");
    return log_alpha(mm.alpha, i) + multinomial_log_sim(d, mm.theta, i, k, 1.0 / mm.m);
  };
  return map;
}

AffinityMap AffinityMap::by_name(const std::string& name) {
  if (name == "sq-euclidean") return sq_euclidean();
  if (name == "max-link") return max_link();
  if (name == "gaussian") return gaussian();
  if (name == "density") return density();
  if (name == "multinomial") return multinomial();
  if (name == "weighted-gaussian") return weighted_gaussian();
  if (name == "weighted-multinomial") return weighted_multinomial();
  throw config_error("unknown affinity map: " + name);
}

namespace {

void fill_column(const DataSet& data, const CategoryModel& model, const AffinityMap& map,
                 Matrix& t, std::size_t k) {
  for (std::size_t i = 0; i < t.rows(); ++i) t(i, k) = map.eval(data, model, i, k);
}

}  // namespace

AffinityTable affinity_table(const DataSet& data, const CategoryModel& model,
                             const AffinityMap& map) {
  AffinityTable table;
  table.mode = map.mode;
  table.log_domain = map.log_domain;
  table.t = Matrix(category_count(model), data.size());
  // Probe one entry up front so missing views surface before the parallel
  // region instead of terminating inside it.
  if (table.c() > 0 && table.n() > 0) map.eval(data, model, 0, 0);
#pragma omp parallel for schedule(static)
  for (long long k = 0; k < static_cast<long long>(data.size()); ++k) {
    fill_column(data, model, map, table.t, static_cast<std::size_t>(k));
  }
  return table;
}

AffinityTable affinity_table_serial(const DataSet& data, const CategoryModel& model,
                                    const AffinityMap& map) {
  AffinityTable table;
  table.mode = map.mode;
  table.log_domain = map.log_domain;
  table.t = Matrix(category_count(model), data.size());
  for (std::size_t k = 0; k < data.size(); ++k) fill_column(data, model, map, table.t, k);
  return table;
}

}  // namespace axioclust
