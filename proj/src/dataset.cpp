#include "axioclust/dataset.hpp"

#include <cmath>
#include <string>

namespace axioclust {

DataSet DataSet::from_features(Matrix features) {
  DataSet ds;
  ds.set_features(std::move(features));
  return ds;
}

DataSet DataSet::from_similarity(Matrix similarity, double tol) {
  DataSet ds;
  ds.set_similarity(std::move(similarity), tol);
  return ds;
}

DataSet DataSet::from_adjacency(Matrix adjacency) {
  DataSet ds;
  ds.set_adjacency(std::move(adjacency));
  return ds;
}

void DataSet::adopt_n(std::size_t n) {
  if (n < 1) throw structural_error("dataset must contain at least one object");
  if (n_ == 0) {
    n_ = n;
  } else if (n_ != n) {
    throw structural_error("dataset views disagree on object count: " + std::to_string(n_) +
                           " vs " + std::to_string(n));
  }
}

void DataSet::set_features(Matrix features) {
  if (features.cols() < 1) throw structural_error("feature matrix needs at least one column");
  adopt_n(features.rows());
  features_ = std::move(features);
}

void DataSet::set_similarity(Matrix similarity, double tol) {
  if (similarity.rows() != similarity.cols()) {
    throw structural_error("similarity matrix must be square");
  }
  adopt_n(similarity.rows());
  for (std::size_t k = 0; k < similarity.rows(); ++k) {
    for (std::size_t l = 0; l <= k; ++l) {
      if (similarity(k, l) < 0.0) {
        throw structural_error("similarity entry (" + std::to_string(k) + "," +
                               std::to_string(l) + ") is negative");
      }
      if (std::fabs(similarity(k, l) - similarity(l, k)) > tol) {
        throw structural_error("similarity matrix asymmetric at pair (" + std::to_string(k) +
                               "," + std::to_string(l) + ")");
      }
    }
  }
  similarity_ = std::move(similarity);
}

void DataSet::set_adjacency(Matrix adjacency) {
  if (adjacency.rows() != adjacency.cols()) {
    throw structural_error("adjacency matrix must be square");
  }
  adopt_n(adjacency.rows());
  for (std::size_t k = 0; k < adjacency.rows(); ++k) {
    for (std::size_t l = 0; l < adjacency.cols(); ++l) {
      if (adjacency(k, l) < 0.0) {
        throw structural_error("adjacency entry (" + std::to_string(k) + "," +
                               std::to_string(l) + ") is negative");
      }
    }
  }
  adjacency_ = std::move(adjacency);
  degrees_.assign(n_, 0.0);
  for (std::size_t k = 0; k < n_; ++k) {
    double d = 0.0;
    for (std::size_t l = 0; l < n_; ++l) d += adjacency_(k, l);
    degrees_[k] = d;
  }
}

const Matrix& DataSet::features() const {
  if (!has_features()) throw config_error("dataset has no feature view");
  return features_;
}

const Matrix& DataSet::similarity() const {
  if (!has_similarity()) throw config_error("dataset has no similarity view");
  return similarity_;
}

const Matrix& DataSet::adjacency() const {
  if (!has_adjacency()) throw config_error("dataset has no adjacency view");
  return adjacency_;
}

const std::vector<double>& DataSet::degrees() const {
  if (!has_adjacency()) throw config_error("dataset has no adjacency view");
  return degrees_;
}

}  // namespace axioclust
