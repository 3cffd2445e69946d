#include "axioclust/report.hpp"

#include <cmath>

namespace axioclust {

json finite_or_tag(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const ValidationReport& r) {
  json j;
  j["ok"] = r.ok;
  if (!r.ok) {
    j["violated_constraint"] = r.violated_constraint;
    j["row"] = r.row;
    j["col"] = r.col;
  }
  return j;
}

json to_json(const PartitionClass& c) {
  json j;
  j["top"] = to_string(c.top);
  j["flags"] = json{{"covering", c.covering},
                    {"coincident", c.coincident},
                    {"uninformative", c.uninformative},
                    {"absolute_uninformative", c.absolute_uninformative}};
  j["witnesses"] = c.witnesses;
  j["violations"] = c.violations;
  return j;
}

json to_json(const HardAssignment& a) {
  json j;
  j["labels"] = a.labels;
  j["ties"] = a.ties;
  return j;
}

json to_json(const ResultClassReport& r) {
  json j;
  j["sample_separation"] = json{{"holds", r.sample.holds},
                                {"violations", r.sample.violating_objects}};
  json witnesses = json::array();
  for (const auto& w : r.category.witnesses) {
    if (w) {
      witnesses.push_back(*w);
    } else {
      witnesses.push_back(nullptr);
    }
  }
  j["category_separation"] = json{{"holds", r.category.holds},
                                  {"violations", r.category.violating_clusters},
                                  {"witnesses", witnesses}};
  j["equivalency"] = json{{"holds", r.equivalency.holds},
                          {"mismatches", r.equivalency.mismatched_columns}};
  j["class"] = to_string(r.cls);
  j["flags"] = json{{"coincident", r.coincident}, {"totally_coincident", r.totally_coincident}};
  j["boundary_set"] = r.boundary;
  return j;
}

json to_json(const TheoremReport& r) {
  json j;
  j["theorem"] = r.theorem;
  j["trials"] = r.trials;
  j["exhaustive"] = r.exhaustive;
  j["seed"] = r.seed;
  j["precondition_met"] = r.precondition_met;
  if (!r.note.empty()) j["note"] = r.note;
  j["checks"] = r.checks;
  j["max_breach"] = finite_or_tag(r.max_breach);
  json violations = json::array();
  for (const auto& v : r.violations) {
    json vj;
    vj["inequality"] = v.inequality;
    vj["trial"] = v.trial;
    vj["trial_seed"] = v.trial_seed;
    vj["lhs"] = finite_or_tag(v.lhs);
    vj["rhs"] = finite_or_tag(v.rhs);
    vj["breach"] = finite_or_tag(v.breach);
    vj["domain"] = v.domain;
    if (!v.phi.empty()) vj["phi"] = v.phi;
    violations.push_back(std::move(vj));
  }
  j["violations"] = std::move(violations);
  return j;
}

json to_json(const IndexValue& v) {
  json j;
  j["index"] = v.name;
  j["variant"] = v.variant;
  j["value"] = v.defined ? finite_or_tag(v.value) : json(nullptr);
  j["direction"] = v.max_better ? "max-better" : "min-better";
  j["flags"] = v.flags;
  return j;
}

json to_json(const AuditReport& r) {
  json j;
  j["index"] = r.index;
  j["proper"] = to_json(r.proper_value);
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back(json{{"variant", e.variant_name},
                           {"value", to_json(e.value)},
                           {"conforming", e.conforming}});
  }
  j["variants"] = std::move(entries);
  j["all_conforming"] = r.all_conforming;
  return j;
}

json to_json(const Decomposition& d) {
  return json{{"within", d.within},
              {"between", d.between},
              {"total", d.total},
              {"residual", d.residual}};
}

json model_to_json(const CategoryModel& model) {
  return std::visit(
      [](const auto& m) -> json {
        using T = std::decay_t<decltype(m)>;
        json j;
        if constexpr (std::is_same_v<T, PrototypeModel>) {
          j["type"] = "prototype";
          j["v"] = to_json(m.v);
        } else if constexpr (std::is_same_v<T, ExemplarModel>) {
          j["type"] = "exemplar";
          j["members"] = m.members;
        } else if constexpr (std::is_same_v<T, MultinomialModel>) {
          j["type"] = "multinomial";
          j["theta"] = to_json(m.theta);
          j["m"] = m.m;
          if (!m.alpha.empty()) j["alpha"] = m.alpha;
        } else {
          j["type"] = "gaussian";
          j["v"] = to_json(m.v);
          j["sigma"] = m.sigma;
          j["kappa"] = m.kappa;
          j["beta"] = m.beta;
          j["m"] = m.m;
          if (!m.alpha.empty()) j["alpha"] = m.alpha;
        }
        return j;
      },
      model);
}

json result_to_json(const ClusteringResult& result) {
  json j;
  j["model"] = model_to_json(result.model);
  j["partition"] = to_json(result.partition.u);
  j["partition_kind"] = to_string(result.partition.kind);
  j["affinity"] = json{{"name", result.affinity.name},
                       {"mode", to_string(result.affinity.mode)},
                       {"log_domain", result.affinity.log_domain}};
  j["labels"] = hard_assignment(result.partition).labels;
  j["trace"] = result.trace;
  j["iterations"] = result.iterations;
  j["converged"] = result.converged;
  j["seed"] = result.seed;
  j["update_order"] = result.update_order;
  j["exit_equivalency"] = result.exit_equivalency;
  if (!result.sample_weights.empty()) {
    json weights = json::array();
    for (double w : result.sample_weights) weights.push_back(finite_or_tag(w));
    json log_weights = json::array();
    for (double w : result.log_sample_weights) log_weights.push_back(finite_or_tag(w));
    j["sample_weights"] = std::move(weights);
    j["log_sample_weights"] = std::move(log_weights);
    j["max_alpha_simplex_err"] = result.max_alpha_simplex_err;
    j["max_u_colsum_err"] = result.max_u_colsum_err;
    j["max_row_stochastic_err"] = result.max_row_stochastic_err;
  }
  return j;
}

json instance_to_json(const GeneratedInstance& inst) {
  json j;
  j["seed"] = inst.seed;
  j["axioms_hold"] = inst.axioms_hold;
  json data;
  if (inst.data->has_features()) data["features"] = to_json(inst.data->features());
  if (inst.data->has_similarity()) data["similarity"] = to_json(inst.data->similarity());
  if (inst.data->has_adjacency()) data["adjacency"] = to_json(inst.data->adjacency());
  j["data"] = std::move(data);
  j["similarity_result"] = result_to_json(inst.similarity_result);
  if (inst.dissimilarity_result) {
    j["dissimilarity_result"] = result_to_json(*inst.dissimilarity_result);
  }
  return j;
}

}  // namespace axioclust
