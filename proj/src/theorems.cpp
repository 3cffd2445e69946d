#include "axioclust/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "axioclust/numeric.hpp"

namespace axioclust {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double checked_pow(double t, double e) {
  if (t < 0.0) throw std::domain_error("convex pair evaluated at a negative argument");
  return std::pow(t, e);
}

}  // namespace

double ConvexPair::f(double t) const { return checked_pow(t, convex ? m : 1.0 / m); }

double ConvexPair::g(double t) const { return checked_pow(t, convex ? 1.0 / m : m); }

ConvexPair ConvexPair::power(double m, bool convex) {
  if (m < 1.0) throw std::domain_error("power pair requires m >= 1");
  return ConvexPair{m, convex};
}

namespace {

double linear_entry(const AffinityTable& t, std::size_t i, std::size_t k) {
  double v = t.t(i, k);
  return t.log_domain ? std::exp(v) : v;
}

double log_entry(const AffinityTable& t, std::size_t i, std::size_t k) {
  double v = t.t(i, k);
  if (t.log_domain) return v;
  return v > 0.0 ? std::log(v) : kNegInf;
}

void check_phi(const AffinityTable& t, const AssignmentMap& phi) {
  if (phi.size() != t.n()) throw structural_error("assignment map length != object count");
  for (std::size_t v : phi) {
    if (v >= t.c()) throw structural_error("assignment map value out of range");
  }
}

void check_alpha(const AffinityTable& t, const std::vector<double>& alpha) {
  if (alpha.size() != t.c()) throw structural_error("alpha length != category count");
  double sum = 0.0;
  for (double a : alpha) {
    if (a <= 0.0) throw std::domain_error("mixture weights must be positive");
    sum += a;
  }
  if (!nearly_equal(sum, 1.0, kValidationTol)) {
    throw std::domain_error("mixture weights must sum to 1");
  }
}

}  // namespace

double sum_along(const AffinityTable& t, const AssignmentMap& phi) {
  check_phi(t, phi);
  double acc = 0.0;
  for (std::size_t k = 0; k < t.n(); ++k) acc += linear_entry(t, phi[k], k);
  return acc;
}

double log_prod_along(const AffinityTable& t, const AssignmentMap& phi) {
  check_phi(t, phi);
  double acc = 0.0;
  for (std::size_t k = 0; k < t.n(); ++k) {
    double v = log_entry(t, phi[k], k);
    if (v == kNegInf) return kNegInf;
    acc += v;
  }
  return acc;
}

double log_prod_mixture(const AffinityTable& t, const std::vector<double>& alpha) {
  check_alpha(t, alpha);
  double acc = 0.0;
  std::vector<double> terms(t.c());
  for (std::size_t k = 0; k < t.n(); ++k) {
    for (std::size_t i = 0; i < t.c(); ++i) {
      terms[i] = std::log(alpha[i]) + log_entry(t, i, k);
    }
    double v = log_sum_exp(terms);
    if (v == kNegInf) return kNegInf;
    acc += v;
  }
  return acc;
}

double general_means_sum(const AffinityTable& t, const std::vector<double>& alpha,
                         const ConvexPair& pair) {
  check_alpha(t, alpha);
  double acc = 0.0;
  for (std::size_t k = 0; k < t.n(); ++k) {
    double inner = 0.0;
    for (std::size_t i = 0; i < t.c(); ++i) inner += alpha[i] * pair.g(linear_entry(t, i, k));
    acc += pair.f(inner);
  }
  return acc;
}

double log_prod_general_means(const AffinityTable& t, const std::vector<double>& alpha,
                              const ConvexPair& pair) {
  check_alpha(t, alpha);
  double acc = 0.0;
  for (std::size_t k = 0; k < t.n(); ++k) {
    double inner = 0.0;
    for (std::size_t i = 0; i < t.c(); ++i) inner += alpha[i] * pair.g(linear_entry(t, i, k));
    double v = pair.f(inner);
    double lg = v > 0.0 ? std::log(v) : kNegInf;
    if (lg == kNegInf) return kNegInf;
    acc += lg;
  }
  return acc;
}

namespace {

// lhs >= rhs expected (or <= when flipped). Returns the positive breach, or
// 0 when the inequality holds. -inf on the dominated side never violates.
double breach_ge(double lhs, double rhs) {
  if (rhs == kNegInf) return 0.0;
  if (lhs == kNegInf) return std::numeric_limits<double>::infinity();
  double b = rhs - lhs;
  return b > 0.0 ? b : 0.0;
}

struct TrialOutcome {
  std::vector<TheoremViolation> violations;
  std::size_t checks = 0;
};

struct VerifyContext {
  const AffinityTable* table = nullptr;
  AssignmentMap varphi;  // membership argmax map
  bool similarity_side = true;
  double lhs_log_prod = 0.0;
  double lhs_sum = 0.0;
};

void record(TrialOutcome& out, int inequality, long long trial, std::uint64_t trial_seed,
            double lhs, double rhs, double breach, const char* domain,
            const AssignmentMap* phi) {
  ++out.checks;
  if (breach <= kTheoremSlack) return;
  TheoremViolation v;
  v.inequality = inequality;
  v.trial = trial;
  v.trial_seed = trial_seed;
  v.lhs = lhs;
  v.rhs = rhs;
  v.breach = breach;
  v.domain = domain;
  if (phi) v.phi = *phi;
  out.violations.push_back(v);
}

// Inequalities (2)/(3) (similarity) or their (14)/(12) mirrors for one map.
void check_map(const VerifyContext& ctx, const AssignmentMap& phi, long long trial,
               std::uint64_t trial_seed, TrialOutcome& out) {
  const AffinityTable& t = *ctx.table;
  double rhs_log = log_prod_along(t, phi);
  double rhs_sum = sum_along(t, phi);
  if (ctx.similarity_side) {
    record(out, 2, trial, trial_seed, ctx.lhs_log_prod, rhs_log,
           breach_ge(ctx.lhs_log_prod, rhs_log), "log", &phi);
    record(out, 3, trial, trial_seed, ctx.lhs_sum, rhs_sum, breach_ge(ctx.lhs_sum, rhs_sum),
           "linear", &phi);
  } else {
    record(out, 12, trial, trial_seed, ctx.lhs_sum, rhs_sum, breach_ge(rhs_sum, ctx.lhs_sum),
           "linear", &phi);
    record(out, 14, trial, trial_seed, ctx.lhs_log_prod, rhs_log,
           breach_ge(rhs_log, ctx.lhs_log_prod), "log", &phi);
  }
}

// Mixture/general-means inequalities for one (alpha, pair) draw.
void check_mixture(const VerifyContext& ctx, const std::vector<double>& alpha,
                   const ConvexPair& pair, long long trial, std::uint64_t trial_seed,
                   TrialOutcome& out) {
  const AffinityTable& t = *ctx.table;
  if (ctx.similarity_side) {
    double rhs_mix = log_prod_mixture(t, alpha);
    record(out, 4, trial, trial_seed, ctx.lhs_log_prod, rhs_mix,
           breach_ge(ctx.lhs_log_prod, rhs_mix), "log", nullptr);
    double rhs_gm = general_means_sum(t, alpha, pair);
    record(out, 5, trial, trial_seed, ctx.lhs_sum, rhs_gm, breach_ge(ctx.lhs_sum, rhs_gm),
           "linear", nullptr);
  } else {
    double rhs_gm = general_means_sum(t, alpha, pair);
    record(out, 13, trial, trial_seed, ctx.lhs_sum, rhs_gm, breach_ge(rhs_gm, ctx.lhs_sum),
           "linear", nullptr);
    double rhs_gm_prod = log_prod_general_means(t, alpha, pair);
    record(out, 15, trial, trial_seed, ctx.lhs_log_prod, rhs_gm_prod,
           breach_ge(rhs_gm_prod, ctx.lhs_log_prod), "log", nullptr);
  }
}

TrialOutcome run_trial(const VerifyContext& ctx, std::uint64_t trial_seed, long long trial) {
  static const double kExponents[] = {1.0, 1.5, 2.0, 4.0};
  TrialOutcome out;
  auto rng = make_rng(trial_seed);
  const AffinityTable& t = *ctx.table;

  AssignmentMap phi(t.n());
  std::uniform_int_distribution<std::size_t> pick_cluster(0, t.c() - 1);
  for (std::size_t k = 0; k < t.n(); ++k) phi[k] = pick_cluster(rng);
  std::vector<double> alpha = random_simplex(t.c(), rng);
  std::uniform_int_distribution<int> pick_m(0, 3);
  ConvexPair pair = ConvexPair::power(kExponents[pick_m(rng)], ctx.similarity_side);

  check_map(ctx, phi, trial, trial_seed, out);
  check_mixture(ctx, alpha, pair, trial, trial_seed, out);
  return out;
}

TheoremReport verify_impl(const ClusteringResult& result, std::size_t trials,
                          std::uint64_t seed, bool parallel, bool similarity_side) {
  TheoremReport report;
  report.theorem = similarity_side ? 4 : 5;
  report.trials = trials;
  report.seed = seed;

  AffinityTable table = result.table();
  const bool mode_ok =
      similarity_side == (table.mode == AffinityMode::similarity);

  ResultClassReport cls = classify_clustering_result(result, table);
  report.precondition_met =
      mode_ok && cls.cls == ResultClass::proper && cls.equivalency.holds;
  if (!mode_ok) {
    report.note = "affinity mode does not match the theorem side";
  } else if (!report.precondition_met) {
    report.note = "categorization axioms do not hold (" + to_string(cls.cls) +
                  (cls.equivalency.holds ? "" : ", equivalency fails") +
                  "); breaches below are demonstrations, not theorem violations";
  }

  VerifyContext ctx;
  ctx.table = &table;
  ctx.similarity_side = similarity_side;
  ctx.varphi = hard_assignment(result.partition).labels;
  ctx.lhs_log_prod = log_prod_along(table, ctx.varphi);
  ctx.lhs_sum = sum_along(table, ctx.varphi);

  std::vector<TrialOutcome> outcomes(trials);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long long trial = 0; trial < static_cast<long long>(trials); ++trial) {
      outcomes[trial] = run_trial(ctx, derive_seed(seed, static_cast<std::uint64_t>(trial)), trial);
    }
  } else {
    for (long long trial = 0; trial < static_cast<long long>(trials); ++trial) {
      outcomes[trial] = run_trial(ctx, derive_seed(seed, static_cast<std::uint64_t>(trial)), trial);
    }
  }

  // Exhaustive map sweep when c^n is small enough.
  const std::size_t c = table.c();
  const std::size_t n = table.n();
  double log_count = static_cast<double>(n) * std::log2(static_cast<double>(c));
  TrialOutcome exhaustive_out;
  if (log_count <= 12.0) {  // c^n <= 4096
    report.exhaustive = true;
    AssignmentMap phi(n, 0);
    while (true) {
      check_map(ctx, phi, -1, seed, exhaustive_out);
      std::size_t pos = 0;
      while (pos < n) {
        if (++phi[pos] < c) break;
        phi[pos] = 0;
        ++pos;
      }
      if (pos == n) break;
    }
  }

  for (const auto& out : outcomes) {
    report.checks += out.checks;
    for (const auto& v : out.violations) report.violations.push_back(v);
  }
  report.checks += exhaustive_out.checks;
  for (const auto& v : exhaustive_out.violations) report.violations.push_back(v);
  for (const auto& v : report.violations) report.max_breach = std::max(report.max_breach, v.breach);
  return report;
}

}  // namespace

TheoremReport verify_thm4(const ClusteringResult& result, std::size_t trials,
                          std::uint64_t seed, bool parallel) {
  return verify_impl(result, trials, seed, parallel, /*similarity_side=*/true);
}

TheoremReport verify_thm5(const ClusteringResult& result, std::size_t trials,
                          std::uint64_t seed, bool parallel) {
  return verify_impl(result, trials, seed, parallel, /*similarity_side=*/false);
}

namespace {

Partition argopt_partition(const AffinityTable& t) {
  Partition p;
  p.kind = PartitionKind::hard;
  p.u = Matrix(t.c(), t.n());
  for (std::size_t k = 0; k < t.n(); ++k) {
    std::size_t best = 0;
    double best_v = t.maximize() ? t.t(0, k) : -t.t(0, k);
    for (std::size_t i = 1; i < t.c(); ++i) {
      double v = t.maximize() ? t.t(i, k) : -t.t(i, k);
      if (v > best_v) {
        best_v = v;
        best = i;
      }
    }
    p.u(best, k) = 1.0;
  }
  return p;
}

}  // namespace

GeneratedInstance generate_instance(GeneratorKind kind, std::uint64_t seed, std::size_t n_max,
                                    std::size_t c_max, double axiom_tol) {
  auto rng = make_rng(seed);
  std::uniform_int_distribution<std::size_t> pick_n(4, std::max<std::size_t>(4, n_max));
  std::uniform_int_distribution<std::size_t> pick_c(2, std::max<std::size_t>(2, c_max));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const std::size_t n = pick_n(rng);
  const std::size_t c = std::min(pick_c(rng), n);

  GeneratedInstance inst;
  inst.seed = seed;

  if (kind == GeneratorKind::gaussian_prototype) {
    std::uniform_int_distribution<std::size_t> pick_r(1, 2);
    const std::size_t r = pick_r(rng);
    Matrix features(n, r);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < r; ++j) features(k, j) = 10.0 * unif(rng);
    }
    auto data = std::make_shared<DataSet>(DataSet::from_features(features));

    auto picks = sample_distinct(n, c, rng);
    GaussianModel gm;
    gm.v = Matrix(c, r);
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t j = 0; j < r; ++j) gm.v(i, j) = features(picks[i], j);
    }
    gm.sigma = 2.0;
    gm.kappa = 1.0;
    CategoryModel model = gm;

    ClusteringResult sim;
    sim.model = model;
    sim.affinity = AffinityMap::density();
    sim.data = data;
    sim.seed = seed;
    AffinityTable table = sim.table();
    Partition consistent = argopt_partition(table);
    if (unif(rng) < 0.5) {
      sim.partition = consistent;
    } else {
      Partition random_u;
      random_u.kind = PartitionKind::hard;
      random_u.u = Matrix(c, n);
      std::uniform_int_distribution<std::size_t> pick_cluster(0, c - 1);
      for (std::size_t k = 0; k < n; ++k) random_u.u(pick_cluster(rng), k) = 1.0;
      sim.partition = random_u;
    }

    ClusteringResult dis = sim;
    dis.affinity = AffinityMap::sq_euclidean();

    ResultClassReport sim_cls = classify_clustering_result(sim, table, axiom_tol);
    ResultClassReport dis_cls = classify_clustering_result(dis, axiom_tol);
    inst.axioms_hold = sim_cls.cls == ResultClass::proper && sim_cls.equivalency.holds &&
                       dis_cls.cls == ResultClass::proper && dis_cls.equivalency.holds;
    inst.data = data;
    inst.similarity_result = std::move(sim);
    inst.dissimilarity_result = std::move(dis);
    return inst;
  }

  // multinomial generator
  Matrix adjacency(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      double w = 0.25 + 0.75 * unif(rng);
      adjacency(k, l) = w;
      adjacency(l, k) = w;
    }
  }
  auto data = std::make_shared<DataSet>(DataSet::from_adjacency(adjacency));

  MultinomialModel mm;
  mm.theta = Matrix(c, n);
  for (std::size_t i = 0; i < c; ++i) {
    double total = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
      double e = -std::log(std::max(unif(rng), 1e-12));
      mm.theta(i, l) = e;
      total += e;
    }
    for (std::size_t l = 0; l < n; ++l) mm.theta(i, l) /= total;
  }
  CategoryModel model = mm;

  ClusteringResult sim;
  sim.model = model;
  sim.affinity = AffinityMap::multinomial();
  sim.data = data;
  sim.seed = seed;
  AffinityTable table = sim.table();
  if (unif(rng) < 0.5) {
    sim.partition = argopt_partition(table);
  } else {
    Partition random_u;
    random_u.kind = PartitionKind::hard;
    random_u.u = Matrix(c, n);
    std::uniform_int_distribution<std::size_t> pick_cluster(0, c - 1);
    for (std::size_t k = 0; k < n; ++k) random_u.u(pick_cluster(rng), k) = 1.0;
    sim.partition = random_u;
  }

  ResultClassReport cls = classify_clustering_result(sim, table, axiom_tol);
  inst.axioms_hold = cls.cls == ResultClass::proper && cls.equivalency.holds;
  inst.data = data;
  inst.similarity_result = std::move(sim);
  return inst;
}

CounterexampleSearch search_counterexample(GeneratorKind kind, std::size_t budget,
                                           std::uint64_t seed, double axiom_tol,
                                           std::size_t trials_per_instance) {
  CounterexampleSearch search;
  for (std::size_t idx = 0; idx < budget; ++idx) {
    GeneratedInstance inst = generate_instance(kind, derive_seed(seed, idx), 8, 3, axiom_tol);
    ++search.tested;
    if (!inst.axioms_hold) continue;
    ++search.verified;

    TheoremReport r4 = verify_thm4(inst.similarity_result, trials_per_instance,
                                   derive_seed(seed, idx ^ 0x7417ULL), /*parallel=*/false);
    if (!r4.violations.empty()) {
      search.violation = r4.violations.front();
      search.hit = std::move(inst);
      return search;
    }
    if (inst.dissimilarity_result) {
      TheoremReport r5 = verify_thm5(*inst.dissimilarity_result, trials_per_instance,
                                     derive_seed(seed, idx ^ 0x7517ULL), /*parallel=*/false);
      if (!r5.violations.empty()) {
        search.violation = r5.violations.front();
        search.hit = std::move(inst);
        return search;
      }
    }
  }
  return search;
}

}  // namespace axioclust
