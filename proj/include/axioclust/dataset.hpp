#pragma once

#include <cstddef>
#include <vector>

#include "axioclust/matrix.hpp"

namespace axioclust {

// One dataset under up to three views: an n x r feature matrix, an n x n
// nonnegative symmetric similarity matrix, and an n x n nonnegative
// adjacency matrix. Node degrees are derived from the adjacency view at
// attach time and are never stored stale. Instances are immutable once
// built, so they can be shared read-only across threads.
class DataSet {
 public:
  static DataSet from_features(Matrix features);
  static DataSet from_similarity(Matrix similarity, double tol = kValidationTol);
  static DataSet from_adjacency(Matrix adjacency);

  // Attach an additional view; object counts must agree.
  void set_features(Matrix features);
  void set_similarity(Matrix similarity, double tol = kValidationTol);
  void set_adjacency(Matrix adjacency);

  std::size_t size() const { return n_; }
  std::size_t feature_dim() const { return features_.cols(); }

  bool has_features() const { return !features_.empty(); }
  bool has_similarity() const { return !similarity_.empty(); }
  bool has_adjacency() const { return !adjacency_.empty(); }

  // Throw config_error when the view is absent.
  const Matrix& features() const;
  const Matrix& similarity() const;
  const Matrix& adjacency() const;
  const std::vector<double>& degrees() const;

 private:
  void adopt_n(std::size_t n);

  std::size_t n_ = 0;
  Matrix features_;    // n x r
  Matrix similarity_;  // n x n
  Matrix adjacency_;   // n x n
  std::vector<double> degrees_;
};

}  // namespace axioclust
