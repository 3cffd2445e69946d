#include "axioclust/axioms.hpp"

#include "axioclust/ties.hpp"

namespace axioclust {

std::string to_string(ResultClass cls) {
  switch (cls) {
    case ResultClass::proper: return "proper";
    case ResultClass::overlapping: return "overlapping";
    case ResultClass::improper: return "improper";
  }
  return "?";
}

SampleSeparationReport check_sample_separation(const AffinityTable& t, double tol) {
  SampleSeparationReport report;
  for (std::size_t k = 0; k < t.n(); ++k) {
    if (!strict_optimum(t.t.col(k), t.maximize(), tol)) report.violating_objects.push_back(k);
  }
  report.holds = report.violating_objects.empty();
  return report;
}

CategorySeparationReport check_category_separation(const AffinityTable& t, double tol) {
  CategorySeparationReport report;
  report.witnesses.assign(t.c(), std::nullopt);
  const bool maximize = t.maximize();
  for (std::size_t i = 0; i < t.c(); ++i) {
    for (std::size_t k = 0; k < t.n(); ++k) {
      bool wins = true;
      for (std::size_t j = 0; j < t.c() && wins; ++j) {
        if (j == i) continue;
        double a = maximize ? t.t(i, k) : -t.t(i, k);
        double b = maximize ? t.t(j, k) : -t.t(j, k);
        wins = strictly_greater(a, b, tol);
      }
      if (wins) {
        report.witnesses[i] = k;
        break;
      }
    }
    if (!report.witnesses[i]) report.violating_clusters.push_back(i);
  }
  report.holds = report.violating_clusters.empty();
  return report;
}

EquivalencyReport check_categorization_equivalency(const Partition& u, const AffinityTable& t,
                                                   double tol) {
  if (u.c() != t.c() || u.n() != t.n()) {
    throw structural_error("partition and affinity table dimensions disagree");
  }
  EquivalencyReport report;
  for (std::size_t k = 0; k < t.n(); ++k) {
    auto u_set = arg_opt_set(u.u.col(k), /*maximize=*/true, tol);
    auto t_set = arg_opt_set(t.t.col(k), t.maximize(), tol);
    if (u_set != t_set) report.mismatched_columns.push_back(k);
  }
  report.holds = report.mismatched_columns.empty();
  return report;
}

std::vector<std::size_t> boundary_set(const AffinityTable& t, double tol) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < t.n(); ++k) {
    if (arg_opt_set(t.t.col(k), t.maximize(), tol).size() > 1) out.push_back(k);
  }
  return out;
}

ResultClassReport classify_clustering_result(const ClusteringResult& result,
                                             const AffinityTable& table, double tol) {
  ResultClassReport report;
  report.sample = check_sample_separation(table, tol);
  report.category = check_category_separation(table, tol);
  report.equivalency = check_categorization_equivalency(result.partition, table, tol);
  report.boundary = boundary_set(table, tol);

  if (!report.category.holds) {
    report.cls = ResultClass::improper;
  } else if (!report.sample.holds) {
    report.cls = ResultClass::overlapping;
  } else {
    report.cls = ResultClass::proper;
  }

  const std::size_t c = category_count(result.model);
  bool any_equal = false;
  bool all_equal = true;
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i + 1; j < c; ++j) {
      bool eq = categories_equal(result.model, i, j, tol);
      any_equal = any_equal || eq;
      all_equal = all_equal && eq;
    }
  }
  report.coincident = c >= 2 && any_equal;
  report.totally_coincident = c >= 2 && all_equal;
  return report;
}

ResultClassReport classify_clustering_result(const ClusteringResult& result, double tol) {
  return classify_clustering_result(result, result.table(), tol);
}

}  // namespace axioclust
