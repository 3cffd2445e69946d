#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "axioclust/common.hpp"

namespace axioclust {

// Indices not strictly beaten by any other entry, judging strictness with
// `tol` (the arg-optimum set under ties). For tol >= 0 this is exactly the
// set of entries within tol of the best one.
std::vector<std::size_t> arg_opt_set(std::span<const double> values, bool maximize, double tol);

// The index that strictly beats every other entry by more than `tol`, if one
// exists. This is the literal "exists i, for all j != i, v_i > v_j" reading,
// which keeps deliberately broken tolerances (tol < 0) behaving the way the
// counterexample-search sanity checks expect.
std::optional<std::size_t> strict_optimum(std::span<const double> values, bool maximize, double tol);

// Smallest index attaining the plain optimum, plus the gap between the best
// and second-best values (+inf when there is a single entry).
struct ArgOpt {
  std::size_t index = 0;
  double gap = 0.0;
};
ArgOpt arg_opt(std::span<const double> values, bool maximize);

}  // namespace axioclust
