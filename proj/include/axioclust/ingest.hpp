#pragma once

#include <string>

#include "axioclust/dataset.hpp"
#include "axioclust/partition.hpp"

namespace axioclust {

// Numeric CSV, optional single header line. Errors carry line numbers.
Matrix read_csv_matrix(const std::string& path, bool header = false);

// view: "features-csv", "similarity-csv" (validated symmetric within 1e-9),
// or "edgelist" (lines "k l [w]", 0-based node ids, symmetrized dense
// adjacency with degrees computed).
DataSet ingest(const std::string& path, const std::string& view, bool header = false);

// c rows x n columns, no header; the kind comes from the caller.
Partition read_partition_csv(const std::string& path, PartitionKind kind);

}  // namespace axioclust
