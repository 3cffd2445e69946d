#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "axioclust/matrix.hpp"

namespace axioclust {

enum class PartitionKind { hard, soft, possibilistic };

std::string to_string(PartitionKind kind);
PartitionKind partition_kind_from_string(const std::string& name);

// c x n membership matrix with a declared kind. Columns index objects, rows
// index clusters.
struct Partition {
  Matrix u;
  PartitionKind kind = PartitionKind::hard;

  std::size_t c() const { return u.rows(); }
  std::size_t n() const { return u.cols(); }
};

struct ValidationReport {
  bool ok = true;
  std::string violated_constraint;  // empty when ok
  std::size_t row = 0;              // offending row/column where applicable
  std::size_t col = 0;
};

// Checks the declared kind's constraints:
//   hard:          columns sum to 1, entries in {0,1}, row sums in [1, n)
//   soft:          columns sum to 1, entries in [0,1], row sums in (0, n)
//   possibilistic: column sums > 0, row sums > 0, entries >= 0
// The row-sum upper bound is waived for c = 1, where the all-ones row is the
// only representable partition. Comparisons use tolerance eps.
ValidationReport validate_partition(const Partition& p, double eps = kValidationTol);

enum class PartitionTop { proper, overlapping, improper };

std::string to_string(PartitionTop top);

struct PartitionClass {
  PartitionTop top = PartitionTop::proper;
  // Improper subflags; populated only when top == improper.
  bool covering = false;
  bool coincident = false;
  bool uninformative = false;
  bool absolute_uninformative = false;
  // One witness object per cluster when top != improper.
  std::vector<std::size_t> witnesses;
  // Overlapping: columns whose maximum is tied. Improper: clusters lacking a
  // strict witness.
  std::vector<std::size_t> violations;
};

// Partition taxonomy. Proper: every column has a strict unique maximum and
// every cluster strictly wins some column. Overlapping: some column ties at
// its maximum but every cluster still has a strict witness. Improper: some
// cluster has no strict witness. Values within tol are tied.
PartitionClass classify_partition(const Partition& p, double tol = kTieTol);

// U_pi: every column equals the probability vector pi (Kronecker product
// with the all-ones row). Returned kind is soft.
Partition make_uninformative(const std::vector<double>& pi, std::size_t n);

struct HardAssignment {
  std::vector<std::size_t> labels;  // argmax per column, smallest index on ties
  std::vector<std::size_t> ties;    // columns whose top two entries differ by <= tol
};

HardAssignment hard_assignment(const Partition& p, double tol = kTieTol);

}  // namespace axioclust
