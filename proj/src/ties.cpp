#include "axioclust/ties.hpp"

#include <limits>

namespace axioclust {

namespace {
inline double oriented(double v, bool maximize) { return maximize ? v : -v; }
}  // namespace

std::vector<std::size_t> arg_opt_set(std::span<const double> values, bool maximize, double tol) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    bool beaten = false;
    for (std::size_t j = 0; j < values.size() && !beaten; ++j) {
      if (j == i) continue;
      beaten = strictly_greater(oriented(values[j], maximize), oriented(values[i], maximize), tol);
    }
    if (!beaten) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> strict_optimum(std::span<const double> values, bool maximize,
                                          double tol) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    bool wins_all = true;
    for (std::size_t j = 0; j < values.size() && wins_all; ++j) {
      if (j == i) continue;
      wins_all = strictly_greater(oriented(values[i], maximize), oriented(values[j], maximize), tol);
    }
    if (wins_all) return i;
  }
  return std::nullopt;
}

ArgOpt arg_opt(std::span<const double> values, bool maximize) {
  ArgOpt result;
  double best = oriented(values[0], maximize);
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (oriented(values[i], maximize) > best) {
      best = oriented(values[i], maximize);
      result.index = i;
    }
  }
  double second = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i == result.index) continue;
    double v = oriented(values[i], maximize);
    if (v > second) second = v;
  }
  result.gap = values.size() > 1 ? best - second : std::numeric_limits<double>::infinity();
  return result;
}

}  // namespace axioclust
