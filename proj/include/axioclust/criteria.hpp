#pragma once

#include <string>
#include <vector>

#include "axioclust/category.hpp"
#include "axioclust/dataset.hpp"
#include "axioclust/partition.hpp"
#include "axioclust/theorems.hpp"

namespace axioclust {

// Clustering criterion evaluators (compactness and separation). All sums run
// serially left to right so repeated evaluations are bit-identical.

// Sum of squared errors under the partition's argmax labels.
double sse(const DataSet& data, const Matrix& prototypes, const Partition& u);

// sum_k f(sum_i alpha_i g(|x_k - v_i|^2)).
double general_c_means(const DataSet& data, const Matrix& prototypes,
                       const std::vector<double>& alpha, const ConvexPair& pair);

// Classification log-likelihood sum_k log p(x_k, X_phi(k)) with
// p = kappa exp(-|x - v|^2 / sigma); equals n log kappa - SSE_phi / sigma.
double cml_loglik(const DataSet& data, const GaussianModel& model, const AssignmentMap& phi);

// Mixture log-likelihood sum_k log sum_i alpha_i p(x_k, X_i), via log-sum-exp.
double mixture_loglik(const DataSet& data, const GaussianModel& model,
                      const std::vector<double>& alpha);

// Sum of similarities crossing a two-cluster hard partition.
double cut_value(const DataSet& data, const Partition& u);

// (1/n) sum_i sum_k u_ik^m |v_i - x_k|^2 - (gamma/c) sum_i sum_t |v_i - v_t|^2.
double ics(const DataSet& data, const Matrix& prototypes, const Partition& u, double m,
           double gamma);

struct Decomposition {
  double within = 0.0;
  double between = 0.0;
  double total = 0.0;
  double residual = 0.0;  // within + between - total
};

// Within/between scatter identity for a hard partition with cluster-mean
// prototypes: within + between = total scatter around the global mean.
Decomposition decomposition_check(const DataSet& data, const Partition& u);

// Direction metadata for report output; true = minimized at the optimum.
bool criterion_minimized(const std::string& name);

}  // namespace axioclust
