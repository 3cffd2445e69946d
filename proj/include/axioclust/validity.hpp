#pragma once

#include <string>
#include <vector>

#include "axioclust/dataset.hpp"
#include "axioclust/partition.hpp"

namespace axioclust {

struct IndexOptions {
  double m = 2.0;                 // fuzzifier for the Fukuyama-Sugeno index
  std::string variant = "paper";  // "paper" or "standard" (Davies-Bouldin, silhouette)
  double tol = kTieTol;           // coincident-prototype detection
};

struct IndexValue {
  std::string name;
  std::string variant;  // empty when the index has a single form
  double value = 0.0;   // +inf on coincident-prototype degeneracies
  bool max_better = false;
  bool defined = true;  // false when the formula has no value (reason in flags)
  std::vector<std::string> flags;
};

// Xie-Beni: membership-weighted compactness over n times the minimum squared
// prototype separation. Coincident prototypes push it to +inf.
IndexValue xie_beni(const DataSet& data, const Matrix& prototypes, const Partition& u,
                    double tol = kTieTol);

// One evaluator per supported index:
//   xie_beni, kwon, v_p, davies_bouldin, fs, silhouette, index_i, dunn,
//   calinski_harabasz, partition_coefficient, partition_entropy
// Formulas follow the printed forms, including their prefactors; the
// "standard" variant provides the textbook Davies-Bouldin and silhouette for
// cross-checking. Partition entropy is the negated (nonnegative) form.
IndexValue compute_index(const std::string& name, const DataSet& data, const Matrix& prototypes,
                         const Partition& u, const IndexOptions& opts = {});

const std::vector<std::string>& index_names();

std::vector<IndexValue> all_indices(const DataSet& data, const Matrix& prototypes,
                                    const Partition& u, const IndexOptions& opts = {});

struct AuditEntry {
  std::string variant_name;  // coincident | uninformative | absolute_uninformative
  IndexValue value;
  bool conforming = false;  // strictly worse than the proper result
};

struct AuditReport {
  std::string index;
  IndexValue proper_value;
  std::vector<AuditEntry> entries;
  bool all_conforming = false;
};

// Scores deliberately improper variants of a proper result on the same data:
// totally coincident prototypes with uniform memberships, an uninformative
// partition with distinct column weights, and the absolute uninformative
// partition. Conforming means every variant scores strictly worse in the
// index's own direction; non-conforming indices are reported, not failed.
AuditReport extreme_value_audit(const std::string& index, const DataSet& data,
                                const Matrix& proper_prototypes, const Partition& proper_u,
                                const IndexOptions& opts = {});

}  // namespace axioclust
