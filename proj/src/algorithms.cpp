#include "axioclust/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "axioclust/numeric.hpp"
#include "axioclust/ties.hpp"

namespace axioclust {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_config(const AlgoConfig& cfg, std::size_t n) {
  if (cfg.max_iterations < 1) throw std::domain_error("max_iterations must be >= 1");
  if (cfg.epsilon <= 0.0) throw std::domain_error("convergence tolerance must be > 0");
  if (cfg.c < 1 || cfg.c > n) throw std::domain_error("cluster count must be in [1, n]");
}

std::vector<std::size_t> nearest_labels(const DataSet& data, const Matrix& v) {
  std::vector<std::size_t> labels(data.size());
  for (std::size_t k = 0; k < data.size(); ++k) {
    std::size_t best = 0;
    double best_d = squared_distance(data.features().row(k), v.row(0));
    for (std::size_t i = 1; i < v.rows(); ++i) {
      double d = squared_distance(data.features().row(k), v.row(i));
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    labels[k] = best;
  }
  return labels;
}

Partition labels_to_partition(const std::vector<std::size_t>& labels, std::size_t c) {
  Partition p;
  p.kind = PartitionKind::hard;
  p.u = Matrix(c, labels.size());
  for (std::size_t k = 0; k < labels.size(); ++k) p.u(labels[k], k) = 1.0;
  return p;
}

// Random hard partition; empty clusters steal the first object found in a
// cluster that can spare one.
Partition random_partition(std::size_t n, std::size_t c, std::mt19937_64& rng) {
  std::vector<std::size_t> labels(n);
  std::uniform_int_distribution<std::size_t> pick(0, c - 1);
  for (auto& l : labels) l = pick(rng);
  std::vector<std::size_t> counts(c, 0);
  for (auto l : labels) ++counts[l];
  for (std::size_t i = 0; i < c; ++i) {
    if (counts[i] > 0) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (counts[labels[k]] >= 2) {
        --counts[labels[k]];
        labels[k] = i;
        ++counts[i];
        break;
      }
    }
  }
  return labels_to_partition(labels, c);
}

Matrix partition_means(const DataSet& data, const Partition& u) {
  const Matrix& x = data.features();
  const std::size_t c = u.c();
  const std::size_t r = x.cols();
  Matrix v(c, r);
  std::vector<double> mass(c, 0.0);
  for (std::size_t k = 0; k < u.n(); ++k) {
    for (std::size_t i = 0; i < c; ++i) {
      double w = u.u(i, k);
      if (w == 0.0) continue;
      mass[i] += w;
      for (std::size_t j = 0; j < r; ++j) v(i, j) += w * x(k, j);
    }
  }
  for (std::size_t i = 0; i < c; ++i) {
    if (mass[i] > 0.0) {
      for (std::size_t j = 0; j < r; ++j) v(i, j) /= mass[i];
    }
  }
  return v;
}

// SSE against the argmax labels; local to avoid a dependency on criteria.
double sse_objective(const DataSet& data, const Matrix& v, const Partition& u) {
  auto labels = hard_assignment(u).labels;
  double acc = 0.0;
  for (std::size_t k = 0; k < data.size(); ++k) {
    acc += squared_distance(data.features().row(k), v.row(labels[k]));
  }
  return acc;
}

Matrix init_prototypes(const DataSet& data, const AlgoConfig& cfg, std::mt19937_64& rng) {
  if (cfg.init == InitScheme::sample_distinct_objects) {
    auto picks = sample_distinct(data.size(), cfg.c, rng);
    Matrix v(cfg.c, data.feature_dim());
    for (std::size_t i = 0; i < cfg.c; ++i) {
      for (std::size_t j = 0; j < data.feature_dim(); ++j) {
        v(i, j) = data.features()(picks[i], j);
      }
    }
    return v;
  }
  return partition_means(data, random_partition(data.size(), cfg.c, rng));
}

// Cluster means; an emptied cluster is re-seeded with the point farthest
// from its nearest surviving prototype (smallest index on ties, each point
// used at most once per sweep).
Matrix means_with_repair(const DataSet& data, const Partition& u) {
  const Matrix& x = data.features();
  const std::size_t c = u.c();
  const std::size_t r = x.cols();
  auto labels = hard_assignment(u).labels;
  Matrix v(c, r);
  std::vector<std::size_t> counts(c, 0);
  for (std::size_t k = 0; k < u.n(); ++k) {
    ++counts[labels[k]];
    for (std::size_t j = 0; j < r; ++j) v(labels[k], j) += x(k, j);
  }
  for (std::size_t i = 0; i < c; ++i) {
    if (counts[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) v(i, j) /= static_cast<double>(counts[i]);
  }

  std::vector<bool> reseeded(u.n(), false);
  for (std::size_t i = 0; i < c; ++i) {
    if (counts[i] > 0) continue;
    double best_d = -1.0;
    std::size_t best_k = 0;
    for (std::size_t k = 0; k < u.n(); ++k) {
      if (reseeded[k]) continue;
      double dnear = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < c; ++j) {
        if (counts[j] == 0) continue;
        dnear = std::min(dnear, squared_distance(x.row(k), v.row(j)));
      }
      if (dnear > best_d) {
        best_d = dnear;
        best_k = k;
      }
    }
    reseeded[best_k] = true;
    for (std::size_t j = 0; j < r; ++j) v(i, j) = x(best_k, j);
  }
  return v;
}

}  // namespace

ClusteringResult run_framework(std::shared_ptr<const DataSet> data, const AlgoConfig& cfg,
                               Partition initial, FrameworkSteps steps) {
  check_config(cfg, data->size());

  ClusteringResult result;
  result.seed = cfg.seed;
  result.data = data;
  result.affinity = steps.affinity;

  Partition u = std::move(initial);
  double previous = steps.objective(u);
  for (std::size_t it = 1; it <= cfg.max_iterations; ++it) {
    try {
      steps.update_model(u);
      u = steps.update_partition();
    } catch (const std::exception& e) {
      throw structural_error("sweep " + std::to_string(it) + ": " + e.what());
    }
    double j = steps.objective(u);
    result.trace.push_back(j);
    result.label_trace.push_back(hard_assignment(u).labels);
    result.iterations = it;
    if (std::fabs(j - previous) <= cfg.epsilon) {
      result.converged = true;
      break;
    }
    previous = j;
  }

  result.partition = std::move(u);
  result.model = steps.snapshot_model();
  if (steps.finalize) steps.finalize(result);
  result.exit_equivalency =
      check_categorization_equivalency(result.partition, result.table()).holds;
  return result;
}

ClusteringResult c_means(std::shared_ptr<const DataSet> data, const AlgoConfig& cfg) {
  check_config(cfg, data->size());
  auto rng = make_rng(cfg.seed);
  auto v = std::make_shared<Matrix>(init_prototypes(*data, cfg, rng));

  FrameworkSteps steps;
  steps.affinity = AffinityMap::sq_euclidean();
  steps.update_model = [data, v](const Partition& u) { *v = means_with_repair(*data, u); };
  steps.update_partition = [data, v, &cfg]() {
    return labels_to_partition(nearest_labels(*data, *v), cfg.c);
  };
  steps.objective = [data, v](const Partition& u) { return sse_objective(*data, *v, u); };
  steps.snapshot_model = [v]() { return CategoryModel{PrototypeModel{*v}}; };

  Partition u0 = labels_to_partition(nearest_labels(*data, *v), cfg.c);
  auto result = run_framework(data, cfg, std::move(u0), std::move(steps));
  result.update_order = "means -> nearest assignment";
  return result;
}

namespace {

Matrix fcm_membership(const DataSet& data, const Matrix& v, double m) {
  const std::size_t c = v.rows();
  const std::size_t n = data.size();
  Matrix u(c, n);
  const double expo = 1.0 / (m - 1.0);
  std::vector<double> d(c);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < c; ++i) {
      d[i] = squared_distance(data.features().row(k), v.row(i));
      if (d[i] == 0.0) zeros.push_back(i);
    }
    if (!zeros.empty()) {
      // Coincident point and prototype: concentrate on the zero-distance rows.
      double share = 1.0 / static_cast<double>(zeros.size());
      for (std::size_t i : zeros) u(i, k) = share;
      continue;
    }
    for (std::size_t i = 0; i < c; ++i) {
      double denom = 0.0;
      for (std::size_t j = 0; j < c; ++j) denom += std::pow(d[i] / d[j], expo);
      u(i, k) = 1.0 / denom;
    }
  }
  return u;
}

}  // namespace

ClusteringResult fuzzy_c_means(std::shared_ptr<const DataSet> data, const AlgoConfig& cfg) {
  check_config(cfg, data->size());
  if (cfg.m <= 1.0) throw std::domain_error("fuzzy_c_means requires m > 1");
  auto rng = make_rng(cfg.seed);
  auto v = std::make_shared<Matrix>(init_prototypes(*data, cfg, rng));
  const double m = cfg.m;

  FrameworkSteps steps;
  steps.affinity = AffinityMap::sq_euclidean();
  steps.update_model = [data, v, m](const Partition& u) {
    const Matrix& x = data->features();
    Matrix next(v->rows(), x.cols());
    for (std::size_t i = 0; i < v->rows(); ++i) {
      double mass = 0.0;
      for (std::size_t k = 0; k < u.n(); ++k) {
        double w = std::pow(u.u(i, k), m);
        mass += w;
        for (std::size_t j = 0; j < x.cols(); ++j) next(i, j) += w * x(k, j);
      }
      if (mass > 0.0) {
        for (std::size_t j = 0; j < x.cols(); ++j) next(i, j) /= mass;
      } else {
        for (std::size_t j = 0; j < x.cols(); ++j) next(i, j) = (*v)(i, j);
      }
    }
    *v = std::move(next);
  };
  steps.update_partition = [data, v, m]() {
    Partition p;
    p.kind = PartitionKind::soft;
    p.u = fcm_membership(*data, *v, m);
    return p;
  };
  steps.objective = [data, v, m](const Partition& u) {
    double acc = 0.0;
    for (std::size_t i = 0; i < v->rows(); ++i) {
      for (std::size_t k = 0; k < u.n(); ++k) {
        acc += std::pow(u.u(i, k), m) *
               squared_distance(data->features().row(k), v->row(i));
      }
    }
    return acc;
  };
  steps.snapshot_model = [v]() { return CategoryModel{PrototypeModel{*v}}; };

  Partition u0;
  u0.kind = PartitionKind::soft;
  u0.u = fcm_membership(*data, *v, m);
  auto result = run_framework(data, cfg, std::move(u0), std::move(steps));
  result.update_order = "weighted means -> membership update";
  return result;
}

ClusteringResult cml_gaussian(std::shared_ptr<const DataSet> data, const AlgoConfig& cfg) {
  check_config(cfg, data->size());
  if (cfg.sigma <= 0.0 || cfg.kappa <= 0.0) {
    throw std::domain_error("cml_gaussian requires sigma > 0 and kappa > 0");
  }
  auto rng = make_rng(cfg.seed);
  auto v = std::make_shared<Matrix>(init_prototypes(*data, cfg, rng));
  const double sigma = cfg.sigma;
  const double log_kappa = std::log(cfg.kappa);

  FrameworkSteps steps;
  steps.affinity = AffinityMap::density();
  steps.update_model = [data, v](const Partition& u) { *v = means_with_repair(*data, u); };
  steps.update_partition = [data, v, &cfg]() {
    return labels_to_partition(nearest_labels(*data, *v), cfg.c);
  };
  steps.objective = [data, v, sigma, log_kappa](const Partition& u) {
    return static_cast<double>(data->size()) * log_kappa -
           sse_objective(*data, *v, u) / sigma;
  };
  steps.snapshot_model = [v, &cfg]() {
    GaussianModel g;
    g.v = *v;
    g.sigma = cfg.sigma;
    g.kappa = cfg.kappa;
    return CategoryModel{g};
  };

  Partition u0 = labels_to_partition(nearest_labels(*data, *v), cfg.c);
  auto result = run_framework(data, cfg, std::move(u0), std::move(steps));
  result.update_order = "means -> max-density assignment";
  return result;
}

namespace {

// Shared state of the two sample-weighted algorithms: mixing weights, log
// sample weights, and drift trackers. The model step consumes the previous
// sweep's log_a (zero on the first sweep) and refreshes it afterwards.
struct SampleWeightedState {
  std::vector<double> alpha;
  std::vector<double> log_a;
  double max_alpha_err = 0.0;
  double max_colsum_err = 0.0;
  double max_rowsum_err = 0.0;
};

// Shifted linear weights a_k: a global scale on a cancels in every update,
// so exp(log_a - max log_a) avoids underflow without changing the math.
std::vector<double> shifted_weights(const std::vector<double>& log_a) {
  double mx = kNegInf;
  for (double v : log_a) mx = std::max(mx, v);
  if (mx == kNegInf) mx = 0.0;
  std::vector<double> a(log_a.size());
  for (std::size_t k = 0; k < log_a.size(); ++k) a[k] = std::exp(log_a[k] - mx);
  return a;
}

// Column softmax of scores; all -inf columns fall back to uniform.
Matrix score_softmax(const Matrix& scores, double& max_colsum_err) {
  Matrix u(scores.rows(), scores.cols());
  for (std::size_t k = 0; k < scores.cols(); ++k) {
    double mx = kNegInf;
    for (std::size_t i = 0; i < scores.rows(); ++i) mx = std::max(mx, scores(i, k));
    if (mx == kNegInf) {
      double share = 1.0 / static_cast<double>(scores.rows());
      for (std::size_t i = 0; i < scores.rows(); ++i) u(i, k) = share;
      continue;
    }
    double total = 0.0;
    for (std::size_t i = 0; i < scores.rows(); ++i) {
      double e = std::exp(scores(i, k) - mx);
      u(i, k) = e;
      total += e;
    }
    double colsum = 0.0;
    for (std::size_t i = 0; i < scores.rows(); ++i) {
      u(i, k) /= total;
      colsum += u(i, k);
    }
    max_colsum_err = std::max(max_colsum_err, std::fabs(colsum - 1.0));
  }
  return u;
}

void update_alpha(SampleWeightedState& st, const Matrix& u, const std::vector<double>& a) {
  std::vector<double> mass(u.rows(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < u.rows(); ++i) {
    for (std::size_t k = 0; k < u.cols(); ++k) mass[i] += a[k] * u(i, k);
    total += mass[i];
  }
  if (total > 0.0) {
    double sum = 0.0;
    for (std::size_t i = 0; i < u.rows(); ++i) {
      st.alpha[i] = mass[i] / total;
      sum += st.alpha[i];
    }
    st.max_alpha_err = std::max(st.max_alpha_err, std::fabs(sum - 1.0));
  }
}

void attach_state(ClusteringResult& result, const SampleWeightedState& st) {
  result.log_sample_weights = st.log_a;
  result.sample_weights.resize(st.log_a.size());
  for (std::size_t k = 0; k < st.log_a.size(); ++k) {
    result.sample_weights[k] = std::exp(st.log_a[k]);
  }
  result.max_alpha_simplex_err = st.max_alpha_err;
  result.max_u_colsum_err = st.max_colsum_err;
  result.max_row_stochastic_err = st.max_rowsum_err;
}

}  // namespace

ClusteringResult sample_weighted_gaussian(std::shared_ptr<const DataSet> data,
                                          const AlgoConfig& cfg) {
  check_config(cfg, data->size());
  if (cfg.m < 1.0 || cfg.beta <= 0.0) {
    throw std::domain_error("sample_weighted_gaussian requires m >= 1 and beta > 0");
  }
  const std::size_t n = data->size();
  const std::size_t c = cfg.c;
  const double inv_mb = 1.0 / (cfg.m * cfg.beta);

  auto rng = make_rng(cfg.seed);
  auto v = std::make_shared<Matrix>(init_prototypes(*data, cfg, rng));
  auto st = std::make_shared<SampleWeightedState>();
  st->alpha.assign(c, 1.0 / static_cast<double>(c));
  st->log_a.assign(n, 0.0);

  auto scores = [data, v, st, inv_mb]() {
    Matrix s(v->rows(), data->size());
    for (std::size_t i = 0; i < v->rows(); ++i) {
      double la = st->alpha[i] > 0.0 ? std::log(st->alpha[i]) : kNegInf;
      for (std::size_t k = 0; k < data->size(); ++k) {
        s(i, k) = la - inv_mb * squared_distance(data->features().row(k), v->row(i));
      }
    }
    return s;
  };
  auto refresh_log_a = [st, scores, &cfg]() {
    Matrix s = scores();
    for (std::size_t k = 0; k < s.cols(); ++k) {
      st->log_a[k] = cfg.m * log_sum_exp(s.col(k));
    }
  };

  FrameworkSteps steps;
  steps.affinity = AffinityMap::weighted_gaussian();
  steps.update_model = [data, v, st, refresh_log_a](const Partition& u) {
    const Matrix& x = data->features();
    std::vector<double> a = shifted_weights(st->log_a);
    Matrix next(v->rows(), x.cols());
    for (std::size_t i = 0; i < v->rows(); ++i) {
      double mass = 0.0;
      for (std::size_t k = 0; k < u.n(); ++k) {
        double w = a[k] * u.u(i, k);
        mass += w;
        for (std::size_t j = 0; j < x.cols(); ++j) next(i, j) += w * x(k, j);
      }
      if (mass > 0.0) {
        for (std::size_t j = 0; j < x.cols(); ++j) next(i, j) /= mass;
      } else {
        for (std::size_t j = 0; j < x.cols(); ++j) next(i, j) = (*v)(i, j);
      }
    }
    *v = std::move(next);
    update_alpha(*st, u.u, a);
    refresh_log_a();
  };
  steps.update_partition = [st, scores]() {
    Partition p;
    p.kind = PartitionKind::soft;
    p.u = score_softmax(scores(), st->max_colsum_err);
    return p;
  };
  steps.objective = [st](const Partition&) {
    double acc = 0.0;
    for (double la : st->log_a) acc += std::exp(la);
    return acc;
  };
  steps.snapshot_model = [v, st, &cfg]() {
    GaussianModel g;
    g.v = *v;
    g.sigma = cfg.sigma;
    g.kappa = cfg.kappa;
    g.beta = cfg.beta;
    g.m = cfg.m;
    g.alpha = st->alpha;
    return CategoryModel{g};
  };
  steps.finalize = [st](ClusteringResult& r) { attach_state(r, *st); };

  Partition u0;
  u0.kind = PartitionKind::soft;
  u0.u = score_softmax(scores(), st->max_colsum_err);
  auto result = run_framework(data, cfg, std::move(u0), std::move(steps));
  result.update_order =
      "u -> (v, alpha) -> a; v and alpha consume the previous sweep's a (a = 1 on sweep 1)";
  return result;
}

ClusteringResult sample_weighted_multinomial(std::shared_ptr<const DataSet> data,
                                             const AlgoConfig& cfg) {
  check_config(cfg, data->size());
  if (cfg.m < 1.0) throw std::domain_error("sample_weighted_multinomial requires m >= 1");
  if (!data->has_adjacency()) {
    throw config_error("sample_weighted_multinomial requires the adjacency view");
  }
  const std::size_t n = data->size();
  const std::size_t c = cfg.c;
  const Matrix& adj = data->adjacency();
  for (std::size_t k = 0; k < n; ++k) {
    if (data->degrees()[k] <= 0.0) {
      throw ingest_error("isolated node " + std::to_string(k) +
                         " (degree 0) cannot be clustered by the multinomial model");
    }
  }

  auto rng = make_rng(cfg.seed);
  auto theta = std::make_shared<Matrix>(c, n);
  {
    // Seed rows from c distinct objects, smoothed so every node keeps
    // positive mass. The first object is drawn by the seeded RNG; later ones
    // minimize the maximum adjacency to the objects already chosen, which
    // keeps seeds in different communities (same-community seeds collapse
    // the rows onto each other).
    std::vector<std::vector<std::size_t>> groups(c);
    if (cfg.init == InitScheme::sample_distinct_objects) {
      std::uniform_int_distribution<std::size_t> pick_first(0, n - 1);
      std::vector<std::size_t> picks{pick_first(rng)};
      while (picks.size() < c) {
        std::size_t best_k = n;
        double best_link = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < n; ++k) {
          if (std::find(picks.begin(), picks.end(), k) != picks.end()) continue;
          double link = 0.0;
          for (std::size_t o : picks) link = std::max(link, adj(k, o));
          if (link < best_link) {
            best_link = link;
            best_k = k;
          }
        }
        picks.push_back(best_k);
      }
      for (std::size_t i = 0; i < c; ++i) groups[i].push_back(picks[i]);
    } else {
      auto labels = hard_assignment(random_partition(n, c, rng)).labels;
      for (std::size_t k = 0; k < n; ++k) groups[labels[k]].push_back(k);
    }
    for (std::size_t i = 0; i < c; ++i) {
      double total = 0.0;
      for (std::size_t l = 0; l < n; ++l) {
        double w = 1.0;
        for (std::size_t k : groups[i]) w += adj(k, l);
        (*theta)(i, l) = w;
        total += w;
      }
      for (std::size_t l = 0; l < n; ++l) (*theta)(i, l) /= total;
    }
  }

  auto st = std::make_shared<SampleWeightedState>();
  st->alpha.assign(c, 1.0 / static_cast<double>(c));
  st->log_a.assign(n, 0.0);

  auto scores = [data, theta, st, &cfg]() {
    const Matrix& a = data->adjacency();
    Matrix s(theta->rows(), data->size());
    for (std::size_t i = 0; i < theta->rows(); ++i) {
      double la = st->alpha[i] > 0.0 ? std::log(st->alpha[i]) : kNegInf;
      for (std::size_t k = 0; k < data->size(); ++k) {
        double acc = 0.0;
        for (std::size_t l = 0; l < data->size(); ++l) {
          double w = a(k, l);
          if (w == 0.0) continue;
          double th = (*theta)(i, l);
          acc += w * (th > 0.0 ? std::log(th) : kNegInf);
        }
        s(i, k) = la + acc / cfg.m;
      }
    }
    return s;
  };
  auto refresh_log_a = [st, scores, &cfg]() {
    Matrix s = scores();
    for (std::size_t k = 0; k < s.cols(); ++k) {
      st->log_a[k] = cfg.m * log_sum_exp(s.col(k));
    }
  };

  FrameworkSteps steps;
  steps.affinity = AffinityMap::weighted_multinomial();
  steps.update_model = [data, theta, st, refresh_log_a](const Partition& u) {
    const Matrix& a_mat = data->adjacency();
    std::vector<double> a = shifted_weights(st->log_a);
    Matrix next(theta->rows(), theta->cols());
    for (std::size_t i = 0; i < theta->rows(); ++i) {
      double total = 0.0;
      for (std::size_t l = 0; l < theta->cols(); ++l) {
        double num = 0.0;
        for (std::size_t k = 0; k < u.n(); ++k) {
          double w = a[k] * u.u(i, k);
          if (w == 0.0) continue;
          num += w * a_mat(k, l);
        }
        next(i, l) = num;
        total += num;
      }
      if (total > 0.0) {
        double rowsum = 0.0;
        for (std::size_t l = 0; l < theta->cols(); ++l) {
          next(i, l) /= total;
          rowsum += next(i, l);
        }
        st->max_rowsum_err = std::max(st->max_rowsum_err, std::fabs(rowsum - 1.0));
      } else {
        for (std::size_t l = 0; l < theta->cols(); ++l) next(i, l) = (*theta)(i, l);
      }
    }
    *theta = std::move(next);
    update_alpha(*st, u.u, a);
    refresh_log_a();
  };
  steps.update_partition = [st, scores]() {
    Partition p;
    p.kind = PartitionKind::soft;
    p.u = score_softmax(scores(), st->max_colsum_err);
    return p;
  };
  steps.objective = [st](const Partition&) {
    double acc = 0.0;
    for (double la : st->log_a) acc += std::exp(la);
    return acc;
  };
  steps.snapshot_model = [theta, st, &cfg]() {
    MultinomialModel m;
    m.theta = *theta;
    m.m = cfg.m;
    m.alpha = st->alpha;
    return CategoryModel{m};
  };
  steps.finalize = [st](ClusteringResult& r) { attach_state(r, *st); };

  Partition u0;
  u0.kind = PartitionKind::soft;
  u0.u = score_softmax(scores(), st->max_colsum_err);
  auto result = run_framework(data, cfg, std::move(u0), std::move(steps));
  result.update_order =
      "u -> (theta, alpha) -> a; theta and alpha consume the previous sweep's a (a = 1 on sweep 1)";
  return result;
}

ClusteringResult single_linkage(std::shared_ptr<const DataSet> data, std::size_t c) {
  const std::size_t n = data->size();
  if (!data->has_similarity()) throw config_error("single_linkage requires the similarity view");
  if (c < 1 || c > n) throw std::domain_error("cluster count must be in [1, n]");

  std::vector<std::vector<std::size_t>> members(n);
  std::vector<bool> active(n, true);
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};
  Matrix link(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) link(i, j) = data->similarity()(i, j);
  }

  ClusteringResult result;
  for (std::size_t merge = 0; merge + c < n; ++merge) {
    double best = -std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!active[j]) continue;
        if (link(i, j) > best) {
          best = link(i, j);
          bi = i;
          bj = j;
        }
      }
    }
    // Merge bj into bi; max-link similarity to the rest.
    for (std::size_t l = 0; l < n; ++l) {
      if (!active[l] || l == bi || l == bj) continue;
      double m = std::max(link(bi, l), link(bj, l));
      link(bi, l) = m;
      link(l, bi) = m;
    }
    members[bi].insert(members[bi].end(), members[bj].begin(), members[bj].end());
    active[bj] = false;
    result.trace.push_back(best);
  }

  ExemplarModel model;
  std::vector<std::size_t> labels(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!active[i]) continue;
    std::sort(members[i].begin(), members[i].end());
    for (std::size_t k : members[i]) labels[k] = model.members.size();
    model.members.push_back(members[i]);
  }

  result.model = model;
  result.partition = labels_to_partition(labels, c);
  result.affinity = AffinityMap::max_link();
  result.data = data;
  result.iterations = n - c;
  result.converged = true;
  result.label_trace.push_back(labels);
  result.update_order = "merge most-similar pair, n - c times";
  result.exit_equivalency =
      check_categorization_equivalency(result.partition, result.table()).holds;
  return result;
}

ClusteringResult run_algorithm(const std::string& name, std::shared_ptr<const DataSet> data,
                               const AlgoConfig& cfg) {
  if (name == "single_linkage") return single_linkage(data, cfg.c);
  if (name == "c_means") return c_means(data, cfg);
  if (name == "fuzzy_c_means") return fuzzy_c_means(data, cfg);
  if (name == "cml_gaussian") return cml_gaussian(data, cfg);
  if (name == "sample_weighted_gaussian") return sample_weighted_gaussian(data, cfg);
  if (name == "sample_weighted_multinomial") return sample_weighted_multinomial(data, cfg);
  throw config_error("unknown algorithm: " + name);
}

bool algorithm_known(const std::string& name) {
  return name == "single_linkage" || name == "c_means" || name == "fuzzy_c_means" ||
         name == "cml_gaussian" || name == "sample_weighted_gaussian" ||
         name == "sample_weighted_multinomial";
}

}  // namespace axioclust
