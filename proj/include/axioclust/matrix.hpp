#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "axioclust/common.hpp"

namespace axioclust {

// Dense row-major matrix of doubles. Everything in this project is desk
// scale (n <= 1e5, c <= 1e3), so a flat vector is all we need.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<double> col(std::size_t c) const;

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  bool same_shape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  // Exact elementwise equality; used by the serial-vs-parallel kernel tests.
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Squared Euclidean distance between two equal-length vectors.
double squared_distance(std::span<const double> a, std::span<const double> b);

// Full n x n Euclidean (not squared) distance matrix over the rows of
// `points`. OpenMP over rows; entries are independent so the result is
// bitwise identical to pairwise_distances_serial.
Matrix pairwise_distances(const Matrix& points);
Matrix pairwise_distances_serial(const Matrix& points);

}  // namespace axioclust
