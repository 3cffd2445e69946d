#include "axioclust/matrix.hpp"

#include <cmath>

namespace axioclust {

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != m.cols()) throw structural_error("from_rows: ragged row");
    std::size_t c = 0;
    for (double v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

std::vector<double> Matrix::col(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = data_[r * cols_ + c];
  return out;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double t = a[i] - b[i];
    d += t * t;
  }
  return d;
}

static void distance_row(const Matrix& points, Matrix& out, std::size_t i) {
  for (std::size_t j = 0; j < points.rows(); ++j) {
    out(i, j) = std::sqrt(squared_distance(points.row(i), points.row(j)));
  }
}

Matrix pairwise_distances(const Matrix& points) {
  const std::size_t n = points.rows();
  Matrix out(n, n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    distance_row(points, out, static_cast<std::size_t>(i));
  }
  return out;
}

Matrix pairwise_distances_serial(const Matrix& points) {
  const std::size_t n = points.rows();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) distance_row(points, out, i);
  return out;
}

}  // namespace axioclust
