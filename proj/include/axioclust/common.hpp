#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace axioclust {

// Default tolerances. Constraint sums (partition validation, simplex checks)
// use kValidationTol; strict-inequality decisions in the axiom checkers use
// kTieTol and are caller-overridable.
inline constexpr double kValidationTol = 1e-9;
inline constexpr double kTieTol = 1e-12;
// A theorem inequality only counts as violated when breached by more than
// this, in whichever domain (log or linear) the comparison runs in.
inline constexpr double kTheoremSlack = 1e-9;

// Shape/dimension problems: matrices that do not line up, invalid partitions
// fed to operations that require valid ones.
class structural_error : public std::runtime_error {
 public:
  explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

// A required dataset view or model variant is missing for the requested
// operation (e.g. max-link affinity without a similarity matrix).
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Problems reading input files; messages carry line numbers where known.
class ingest_error : public std::runtime_error {
 public:
  explicit ingest_error(const std::string& what) : std::runtime_error(what) {}
};

// `a > b` decided with slack: values closer than `tol` count as tied.
inline bool strictly_greater(double a, double b, double tol) { return a - b > tol; }

inline bool nearly_equal(double a, double b, double tol) {
  double d = a - b;
  return d <= tol && -d <= tol;
}

}  // namespace axioclust
