#include "axioclust/criteria.hpp"

#include <cmath>
#include <stdexcept>

#include "axioclust/numeric.hpp"

namespace axioclust {

namespace {

void check_prototypes(const DataSet& data, const Matrix& prototypes) {
  if (!data.has_features()) throw config_error("criterion requires the feature view");
  if (prototypes.cols() != data.feature_dim()) {
    throw structural_error("prototype dimension does not match feature dimension");
  }
}

}  // namespace

double sse(const DataSet& data, const Matrix& prototypes, const Partition& u) {
  check_prototypes(data, prototypes);
  if (u.n() != data.size() || u.c() != prototypes.rows()) {
    throw structural_error("partition dimensions do not match data/prototypes");
  }
  auto labels = hard_assignment(u).labels;
  double acc = 0.0;
  for (std::size_t k = 0; k < data.size(); ++k) {
    acc += squared_distance(data.features().row(k), prototypes.row(labels[k]));
  }
  return acc;
}

double general_c_means(const DataSet& data, const Matrix& prototypes,
                       const std::vector<double>& alpha, const ConvexPair& pair) {
  check_prototypes(data, prototypes);
  if (alpha.size() != prototypes.rows()) {
    throw structural_error("alpha length does not match prototype count");
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < data.size(); ++k) {
    double inner = 0.0;
    for (std::size_t i = 0; i < prototypes.rows(); ++i) {
      inner += alpha[i] * pair.g(squared_distance(data.features().row(k), prototypes.row(i)));
    }
    acc += pair.f(inner);
  }
  return acc;
}

double cml_loglik(const DataSet& data, const GaussianModel& model, const AssignmentMap& phi) {
  check_prototypes(data, model.v);
  if (model.sigma <= 0.0) throw std::domain_error("cml_loglik requires sigma > 0");
  if (phi.size() != data.size()) throw structural_error("assignment map length != object count");
  double acc = 0.0;
  const double log_kappa = std::log(model.kappa);
  for (std::size_t k = 0; k < data.size(); ++k) {
    if (phi[k] >= model.v.rows()) throw structural_error("assignment map value out of range");
    acc += log_kappa -
           squared_distance(data.features().row(k), model.v.row(phi[k])) / model.sigma;
  }
  return acc;
}

double mixture_loglik(const DataSet& data, const GaussianModel& model,
                      const std::vector<double>& alpha) {
  check_prototypes(data, model.v);
  if (model.sigma <= 0.0) throw std::domain_error("mixture_loglik requires sigma > 0");
  if (alpha.size() != model.v.rows()) {
    throw structural_error("alpha length does not match component count");
  }
  const double log_kappa = std::log(model.kappa);
  std::vector<double> terms(model.v.rows());
  double acc = 0.0;
  for (std::size_t k = 0; k < data.size(); ++k) {
    for (std::size_t i = 0; i < model.v.rows(); ++i) {
      double log_p = log_kappa -
                     squared_distance(data.features().row(k), model.v.row(i)) / model.sigma;
      terms[i] = (alpha[i] > 0.0 ? std::log(alpha[i]) : -INFINITY) + log_p;
    }
    acc += log_sum_exp(terms);
  }
  return acc;
}

double cut_value(const DataSet& data, const Partition& u) {
  if (!data.has_similarity()) throw config_error("cut requires the similarity view");
  if (u.c() != 2) throw std::domain_error("cut is defined for exactly two clusters");
  if (u.n() != data.size()) throw structural_error("partition size does not match data");
  ValidationReport vr = validate_partition(u);
  if (!vr.ok) throw structural_error("cut requires a valid hard partition: " + vr.violated_constraint);
  auto labels = hard_assignment(u).labels;
  const Matrix& s = data.similarity();
  double acc = 0.0;
  for (std::size_t k = 0; k < data.size(); ++k) {
    if (labels[k] != 0) continue;
    for (std::size_t l = 0; l < data.size(); ++l) {
      if (labels[l] == 1) acc += s(k, l);
    }
  }
  return acc;
}

double ics(const DataSet& data, const Matrix& prototypes, const Partition& u, double m,
           double gamma) {
  check_prototypes(data, prototypes);
  if (u.n() != data.size() || u.c() != prototypes.rows()) {
    throw structural_error("partition dimensions do not match data/prototypes");
  }
  const std::size_t c = prototypes.rows();
  double compact = 0.0;
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t k = 0; k < data.size(); ++k) {
      compact += std::pow(u.u(i, k), m) *
                 squared_distance(prototypes.row(i), data.features().row(k));
    }
  }
  double spread = 0.0;
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t t = 0; t < c; ++t) {
      spread += squared_distance(prototypes.row(i), prototypes.row(t));
    }
  }
  return compact / static_cast<double>(data.size()) -
         gamma / static_cast<double>(c) * spread;
}

Decomposition decomposition_check(const DataSet& data, const Partition& u) {
  if (!data.has_features()) throw config_error("decomposition requires the feature view");
  if (u.n() != data.size()) throw structural_error("partition size does not match data");
  const Matrix& x = data.features();
  const std::size_t n = data.size();
  const std::size_t r = data.feature_dim();
  const std::size_t c = u.c();
  auto labels = hard_assignment(u).labels;

  std::vector<double> mean(r, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < r; ++j) mean[j] += x(k, j);
  }
  for (double& v : mean) v /= static_cast<double>(n);

  Matrix centers(c, r);
  std::vector<std::size_t> counts(c, 0);
  for (std::size_t k = 0; k < n; ++k) {
    ++counts[labels[k]];
    for (std::size_t j = 0; j < r; ++j) centers(labels[k], j) += x(k, j);
  }
  for (std::size_t i = 0; i < c; ++i) {
    if (counts[i] == 0) throw std::domain_error("decomposition: cluster " + std::to_string(i) + " is empty");
    for (std::size_t j = 0; j < r; ++j) centers(i, j) /= static_cast<double>(counts[i]);
  }

  Decomposition d;
  for (std::size_t k = 0; k < n; ++k) {
    d.within += squared_distance(x.row(k), centers.row(labels[k]));
    d.between += squared_distance(centers.row(labels[k]), mean);
    d.total += squared_distance(x.row(k), mean);
  }
  d.residual = d.within + d.between - d.total;
  return d;
}

bool criterion_minimized(const std::string& name) {
  if (name == "sse" || name == "general_c_means" || name == "cut" || name == "ics") return true;
  if (name == "cml_loglik" || name == "mixture_loglik" || name == "sample_weighted_objective") {
    return false;
  }
  throw std::domain_error("unknown criterion: " + name);
}

}  // namespace axioclust
