#pragma once

#include <string>

#include "axioclust/algorithms.hpp"
#include "axioclust/report.hpp"

namespace axioclust {

// One batch request: input, view, algorithm configuration, and which output
// blocks to produce.
struct RunSpec {
  std::string input_path;
  std::string view = "features-csv";  // features-csv | similarity-csv | edgelist
  bool header = false;

  std::string algorithm = "c_means";
  AlgoConfig cfg;

  std::string variant = "paper";  // index variant switch
  bool with_indices = false;
  int theorem = 0;  // 4 or 5 for verify
  std::size_t trials = 1000;

  std::size_t c_min = 2;  // sweep range, inclusive
  std::size_t c_max = 4;

  std::string partition_path;  // classify / indices input
  PartitionKind partition_kind = PartitionKind::soft;
  double tol = kTieTol;

  std::string out_path;  // empty = stdout
};

struct PipelineOutput {
  json report;
  int exit_code = 0;  // 0 ok, 2 improper result, 1 error (thrown instead)
};

// run: execute the algorithm, classify the result, report criteria and the
// optional index/theorem blocks.
PipelineOutput pipeline_run(const RunSpec& spec);

// classify: partition file taxonomy plus axiom checks with the partition as
// its own similarity table (the tautology reading Sim(x_k, X_i) = u_ik).
PipelineOutput pipeline_classify(const RunSpec& spec);

// indices: validity indices of a stored partition against membership-mean
// prototypes.
PipelineOutput pipeline_indices(const RunSpec& spec);

// verify: run the algorithm, then check the theorem inequalities.
PipelineOutput pipeline_verify(const RunSpec& spec);

// sweep: rerun the algorithm for each c in [c_min, c_max] with sub-seed
// seed + c; entries run independently.
PipelineOutput pipeline_sweep(const RunSpec& spec);

}  // namespace axioclust
