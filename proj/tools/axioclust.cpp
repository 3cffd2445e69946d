// Batch front end: ingest a dataset, run a clustering algorithm, and emit a
// JSON report with axiom checks, taxonomy, criteria, validity indices, and
// theorem verification.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "axioclust/pipeline.hpp"

namespace {

using axioclust::PipelineOutput;
using axioclust::RunSpec;

void add_common_flags(CLI::App* cmd, RunSpec& spec) {
  cmd->add_option("input", spec.input_path, "dataset file")->required();
  cmd->add_option("--view", spec.view, "features-csv | similarity-csv | edgelist")
      ->default_val("features-csv");
  cmd->add_flag("--header", spec.header, "skip one CSV header line");
  cmd->add_option("--seed", spec.cfg.seed, "RNG seed");
  cmd->add_option("--tol", spec.tol, "tie tolerance for the axiom checkers");
  cmd->add_option("--out", spec.out_path, "write the JSON report here (default stdout)");
}

void add_algo_flags(CLI::App* cmd, RunSpec& spec) {
  cmd->add_option("--algo", spec.algorithm,
                  "single_linkage | c_means | fuzzy_c_means | cml_gaussian | "
                  "sample_weighted_gaussian | sample_weighted_multinomial");
  cmd->add_option("--c", spec.cfg.c, "cluster count");
  cmd->add_option("--m", spec.cfg.m, "fuzzifier / sample-weight exponent");
  cmd->add_option("--beta", spec.cfg.beta, "Gaussian similarity scale");
  cmd->add_option("--sigma", spec.cfg.sigma, "density scale");
  cmd->add_option("--kappa", spec.cfg.kappa, "density normalization");
  cmd->add_option("--max-iter", spec.cfg.max_iterations, "iteration cap");
  cmd->add_option("--eps", spec.cfg.epsilon, "objective-change convergence threshold");
}

int emit(const PipelineOutput& out, const RunSpec& spec) {
  std::string text = out.report.dump(2);
  text.push_back('\n');
  if (spec.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(spec.out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << spec.out_path << "\n";
      return 1;
    }
    f << text;
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clustering axioms toolkit"};
  app.require_subcommand(1);

  RunSpec spec;
  std::string out_path;  // shared via spec.out_path
  std::string theorem_name;
  std::string kind_name = "soft";

  auto* run = app.add_subcommand("run", "run an algorithm and report axioms/criteria");
  add_common_flags(run, spec);
  add_algo_flags(run, spec);
  run->add_flag("--indices", spec.with_indices, "include validity indices");
  run->add_option("--verify", theorem_name, "also verify thm4 or thm5");
  run->add_option("--trials", spec.trials, "verification trials");
  run->add_option("--variant", spec.variant, "index variant: paper | standard");

  auto* classify = app.add_subcommand("classify", "taxonomy + axioms of a stored partition");
  classify->add_option("partition", spec.partition_path, "partition CSV (c rows x n cols)")
      ->required();
  add_common_flags(classify, spec);
  classify->add_option("--kind", kind_name, "hard | soft | possibilistic");

  auto* indices = app.add_subcommand("indices", "validity indices of a stored partition");
  indices->add_option("partition", spec.partition_path, "partition CSV (c rows x n cols)")
      ->required();
  add_common_flags(indices, spec);
  indices->add_option("--kind", kind_name, "hard | soft | possibilistic");
  indices->add_option("--m", spec.cfg.m, "fuzzifier for the Fukuyama-Sugeno index");
  indices->add_option("--variant", spec.variant, "index variant: paper | standard");

  auto* verify = app.add_subcommand("verify", "run an algorithm and verify a theorem");
  verify->add_option("theorem", theorem_name, "thm4 | thm5")->required();
  add_common_flags(verify, spec);
  add_algo_flags(verify, spec);
  verify->add_option("--trials", spec.trials, "verification trials");

  auto* sweep = app.add_subcommand("sweep", "rerun for each c in a range");
  add_common_flags(sweep, spec);
  add_algo_flags(sweep, spec);
  sweep->add_option("--cmin", spec.c_min, "smallest cluster count");
  sweep->add_option("--cmax", spec.c_max, "largest cluster count");
  sweep->add_flag("--indices", spec.with_indices, "include validity indices per entry");
  sweep->add_option("--variant", spec.variant, "index variant: paper | standard");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!theorem_name.empty()) {
      if (theorem_name == "thm4") {
        spec.theorem = 4;
      } else if (theorem_name == "thm5") {
        spec.theorem = 5;
      } else {
        std::cerr << "error: unknown theorem '" << theorem_name << "' (use thm4 or thm5)\n";
        return 1;
      }
    }
    spec.partition_kind = axioclust::partition_kind_from_string(kind_name);

    if (run->parsed()) return emit(axioclust::pipeline_run(spec), spec);
    if (classify->parsed()) return emit(axioclust::pipeline_classify(spec), spec);
    if (indices->parsed()) return emit(axioclust::pipeline_indices(spec), spec);
    if (verify->parsed()) return emit(axioclust::pipeline_verify(spec), spec);
    if (sweep->parsed()) return emit(axioclust::pipeline_sweep(spec), spec);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
