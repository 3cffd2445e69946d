#include "axioclust/pipeline.hpp"

#include <memory>

#include "axioclust/ingest.hpp"
#include "axioclust/validity.hpp"

namespace axioclust {

namespace {

json spec_to_json(const RunSpec& spec, const char* command) {
  json j;
  j["command"] = command;
  j["input"] = spec.input_path;
  j["view"] = spec.view;
  j["header"] = spec.header;
  j["algo"] = spec.algorithm;
  j["c"] = spec.cfg.c;
  j["m"] = spec.cfg.m;
  j["beta"] = spec.cfg.beta;
  j["sigma"] = spec.cfg.sigma;
  j["kappa"] = spec.cfg.kappa;
  j["seed"] = spec.cfg.seed;
  j["max_iter"] = spec.cfg.max_iterations;
  j["tol"] = spec.tol;
  j["variant"] = spec.variant;
  if (!spec.partition_path.empty()) {
    j["partition"] = spec.partition_path;
    j["kind"] = to_string(spec.partition_kind);
  }
  return j;
}

// Prototypes for index evaluation: the model's own when it has them,
// membership-weighted means otherwise.
Matrix prototypes_for_indices(const DataSet& data, const CategoryModel& model,
                              const Partition& u) {
  if (model_has_prototypes(model)) return model_prototypes(model);
  const Matrix& x = data.features();
  Matrix v(u.c(), x.cols());
  for (std::size_t i = 0; i < u.c(); ++i) {
    double mass = 0.0;
    for (std::size_t k = 0; k < u.n(); ++k) {
      double w = u.u(i, k);
      mass += w;
      for (std::size_t j = 0; j < x.cols(); ++j) v(i, j) += w * x(k, j);
    }
    if (mass > 0.0) {
      for (std::size_t j = 0; j < x.cols(); ++j) v(i, j) /= mass;
    }
  }
  return v;
}

json indices_block(const DataSet& data, const CategoryModel& model, const Partition& u,
                   const RunSpec& spec) {
  IndexOptions opts;
  opts.variant = spec.variant;
  opts.m = spec.cfg.m;
  opts.tol = spec.tol;
  Matrix v = prototypes_for_indices(data, model, u);
  json out = json::array();
  for (const auto& value : all_indices(data, v, u, opts)) out.push_back(to_json(value));
  return out;
}

json criteria_block(const DataSet& data, const ClusteringResult& result) {
  json out = json::object();
  const Partition& u = result.partition;
  if (data.has_features() && model_has_prototypes(result.model)) {
    const Matrix& v = model_prototypes(result.model);
    out["sse"] = json{{"value", sse(data, v, u)}, {"direction", "minimize"}};
    try {
      out["decomposition"] = to_json(decomposition_check(data, u));
    } catch (const std::exception&) {
      // Empty cluster: the identity has no defined value here.
    }
  }
  if (const auto* g = std::get_if<GaussianModel>(&result.model)) {
    AssignmentMap phi = hard_assignment(u).labels;
    out["cml_loglik"] = json{{"value", cml_loglik(data, *g, phi)}, {"direction", "maximize"}};
    if (!g->alpha.empty()) {
      out["mixture_loglik"] =
          json{{"value", mixture_loglik(data, *g, g->alpha)}, {"direction", "maximize"}};
    }
  }
  if (data.has_similarity() && u.c() == 2) {
    try {
      out["cut"] = json{{"value", cut_value(data, u)}, {"direction", "minimize"}};
    } catch (const std::exception&) {
      // Invalid two-cluster partition; cut is undefined.
    }
  }
  return out;
}

int exit_for_class(ResultClass cls) { return cls == ResultClass::improper ? 2 : 0; }

json run_entry(std::shared_ptr<const DataSet> data, const RunSpec& spec, ResultClass* cls_out) {
  ClusteringResult result = run_algorithm(spec.algorithm, data, spec.cfg);
  ResultClassReport cls = classify_clustering_result(result, spec.tol);
  json entry;
  entry["result"] = result_to_json(result);
  entry["axioms"] = to_json(cls);
  entry["criteria"] = criteria_block(*data, result);
  if (spec.with_indices && data->has_features()) {
    entry["indices"] = indices_block(*data, result.model, result.partition, spec);
  }
  if (spec.theorem == 4 || spec.theorem == 5) {
    TheoremReport tr = spec.theorem == 4 ? verify_thm4(result, spec.trials, spec.cfg.seed)
                                         : verify_thm5(result, spec.trials, spec.cfg.seed);
    entry["theorem"] = to_json(tr);
  }
  if (cls_out) *cls_out = cls.cls;
  return entry;
}

}  // namespace

PipelineOutput pipeline_run(const RunSpec& spec) {
  auto data = std::make_shared<const DataSet>(ingest(spec.input_path, spec.view, spec.header));
  PipelineOutput out;
  out.report["schema"] = kSchemaName;
  out.report["spec"] = spec_to_json(spec, "run");
  ResultClass cls = ResultClass::proper;
  json entry = run_entry(data, spec, &cls);
  for (auto& [key, value] : entry.items()) out.report[key] = std::move(value);
  out.exit_code = exit_for_class(cls);
  return out;
}

PipelineOutput pipeline_classify(const RunSpec& spec) {
  auto data = std::make_shared<const DataSet>(ingest(spec.input_path, spec.view, spec.header));
  Partition p = read_partition_csv(spec.partition_path, spec.partition_kind);
  if (p.n() != data->size()) {
    throw structural_error("partition has " + std::to_string(p.n()) + " columns but data has " +
                           std::to_string(data->size()) + " objects");
  }

  PipelineOutput out;
  out.report["schema"] = kSchemaName;
  out.report["spec"] = spec_to_json(spec, "classify");
  out.report["validation"] = to_json(validate_partition(p));
  PartitionClass cls = classify_partition(p, spec.tol);
  out.report["taxonomy"] = to_json(cls);
  out.report["assignment"] = to_json(hard_assignment(p, spec.tol));

  // Axioms under the tautology reading: the membership matrix is its own
  // category similarity table.
  ClusteringResult tautology;
  tautology.partition = p;
  tautology.data = data;
  AffinityTable table;
  table.t = p.u;
  table.mode = AffinityMode::similarity;
  table.log_domain = false;
  ExemplarModel trivial_model;
  trivial_model.members.resize(p.c());
  auto labels = hard_assignment(p, spec.tol).labels;
  for (std::size_t k = 0; k < labels.size(); ++k) trivial_model.members[labels[k]].push_back(k);
  for (auto& m : trivial_model.members) {
    if (m.empty()) m.push_back(0);  // placeholder; coincidence flags are not meaningful here
  }
  tautology.model = trivial_model;
  ResultClassReport axioms = classify_clustering_result(tautology, table, spec.tol);
  out.report["axioms"] = to_json(axioms);
  out.exit_code = cls.top == PartitionTop::improper ? 2 : 0;
  return out;
}

PipelineOutput pipeline_indices(const RunSpec& spec) {
  auto data = std::make_shared<const DataSet>(ingest(spec.input_path, spec.view, spec.header));
  Partition p = read_partition_csv(spec.partition_path, spec.partition_kind);
  if (p.n() != data->size()) {
    throw structural_error("partition has " + std::to_string(p.n()) + " columns but data has " +
                           std::to_string(data->size()) + " objects");
  }
  PipelineOutput out;
  out.report["schema"] = kSchemaName;
  out.report["spec"] = spec_to_json(spec, "indices");

  IndexOptions opts;
  opts.variant = spec.variant;
  opts.m = spec.cfg.m;
  opts.tol = spec.tol;
  Matrix v = prototypes_for_indices(*data, ExemplarModel{}, p);
  json indices = json::array();
  for (const auto& value : all_indices(*data, v, p, opts)) indices.push_back(to_json(value));
  out.report["indices"] = std::move(indices);
  out.report["prototypes"] = to_json(v);
  return out;
}

PipelineOutput pipeline_verify(const RunSpec& spec) {
  auto data = std::make_shared<const DataSet>(ingest(spec.input_path, spec.view, spec.header));
  ClusteringResult result = run_algorithm(spec.algorithm, data, spec.cfg);
  TheoremReport tr = spec.theorem == 5 ? verify_thm5(result, spec.trials, spec.cfg.seed)
                                       : verify_thm4(result, spec.trials, spec.cfg.seed);
  PipelineOutput out;
  out.report["schema"] = kSchemaName;
  out.report["spec"] = spec_to_json(spec, "verify");
  out.report["result"] = result_to_json(result);
  out.report["axioms"] = to_json(classify_clustering_result(result, spec.tol));
  out.report["theorem"] = to_json(tr);
  out.exit_code = (tr.precondition_met && !tr.violations.empty()) ? 1 : 0;
  return out;
}

PipelineOutput pipeline_sweep(const RunSpec& spec) {
  auto data = std::make_shared<const DataSet>(ingest(spec.input_path, spec.view, spec.header));
  if (spec.c_min < 2 || spec.c_max < spec.c_min || spec.c_max > data->size()) {
    throw std::domain_error("sweep range must satisfy 2 <= c_min <= c_max <= n");
  }
  const std::size_t count = spec.c_max - spec.c_min + 1;
  std::vector<json> entries(count);
  std::vector<int> codes(count, 0);

#pragma omp parallel for schedule(dynamic)
  for (long long idx = 0; idx < static_cast<long long>(count); ++idx) {
    RunSpec sub = spec;
    sub.cfg.c = spec.c_min + static_cast<std::size_t>(idx);
    sub.cfg.seed = spec.cfg.seed + sub.cfg.c;  // documented sub-seed rule
    ResultClass cls = ResultClass::proper;
    json entry = run_entry(data, sub, &cls);
    entry["c"] = sub.cfg.c;
    entry["seed"] = sub.cfg.seed;
    entries[idx] = std::move(entry);
    codes[idx] = exit_for_class(cls);
  }

  PipelineOutput out;
  out.report["schema"] = kSchemaName;
  out.report["spec"] = spec_to_json(spec, "sweep");
  out.report["entries"] = json::array();
  for (auto& e : entries) out.report["entries"].push_back(std::move(e));
  for (int code : codes) out.exit_code = std::max(out.exit_code, code);
  return out;
}

}  // namespace axioclust
