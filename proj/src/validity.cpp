#include "axioclust/validity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace axioclust {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct IndexContext {
  const DataSet& data;
  const Matrix& v;
  const Partition& u;
  const IndexOptions& opts;
  std::vector<std::size_t> labels;
  std::vector<std::size_t> sizes;           // n_i from argmax labels
  std::vector<double> global_mean;          // x bar
  std::vector<double> prototype_mean;       // v bar
  double min_proto_sqdist = kInf;           // min_{i != j} |v_i - v_j|^2
};

IndexContext make_context(const DataSet& data, const Matrix& v, const Partition& u,
                          const IndexOptions& opts) {
  if (!data.has_features()) throw config_error("validity indices require the feature view");
  if (u.n() != data.size()) throw structural_error("partition size does not match data");
  if (v.rows() != u.c()) throw structural_error("prototype count does not match partition");
  if (v.cols() != data.feature_dim()) {
    throw structural_error("prototype dimension does not match feature dimension");
  }
  IndexContext ctx{data, v, u, opts, {}, {}, {}, {}, kInf};
  ctx.labels = hard_assignment(u).labels;
  ctx.sizes.assign(u.c(), 0);
  for (auto l : ctx.labels) ++ctx.sizes[l];
  const Matrix& x = data.features();
  ctx.global_mean.assign(x.cols(), 0.0);
  for (std::size_t k = 0; k < x.rows(); ++k) {
    for (std::size_t j = 0; j < x.cols(); ++j) ctx.global_mean[j] += x(k, j);
  }
  for (double& m : ctx.global_mean) m /= static_cast<double>(x.rows());
  ctx.prototype_mean.assign(v.cols(), 0.0);
  for (std::size_t i = 0; i < v.rows(); ++i) {
    for (std::size_t j = 0; j < v.cols(); ++j) ctx.prototype_mean[j] += v(i, j);
  }
  for (double& m : ctx.prototype_mean) m /= static_cast<double>(v.rows());
  for (std::size_t i = 0; i < v.rows(); ++i) {
    for (std::size_t j = i + 1; j < v.rows(); ++j) {
      ctx.min_proto_sqdist = std::min(ctx.min_proto_sqdist, squared_distance(v.row(i), v.row(j)));
    }
  }
  return ctx;
}

double dist(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(squared_distance(a, b));
}

void require_c2(const IndexContext& ctx, const char* name) {
  if (ctx.u.c() < 2) throw std::domain_error(std::string(name) + " requires at least 2 clusters");
}

// sum_i sum_k u_ik^2 |x_k - v_i|^2
double weighted_compactness(const IndexContext& ctx) {
  double acc = 0.0;
  for (std::size_t i = 0; i < ctx.u.c(); ++i) {
    for (std::size_t k = 0; k < ctx.u.n(); ++k) {
      double w = ctx.u.u(i, k);
      acc += w * w * squared_distance(ctx.data.features().row(k), ctx.v.row(i));
    }
  }
  return acc;
}

bool coincident_prototypes(const IndexContext& ctx) {
  return ctx.u.c() >= 2 && ctx.min_proto_sqdist <= ctx.opts.tol;
}

IndexValue eval_xie_beni(const IndexContext& ctx) {
  IndexValue out{"xie_beni", "", 0.0, false, true, {}};
  require_c2(ctx, "xie_beni");
  if (coincident_prototypes(ctx)) {
    out.value = kInf;
    out.flags.push_back("coincident-prototypes");
    return out;
  }
  out.value = weighted_compactness(ctx) /
              (static_cast<double>(ctx.u.n()) * ctx.min_proto_sqdist);
  return out;
}

IndexValue eval_kwon(const IndexContext& ctx) {
  IndexValue out{"kwon", "", 0.0, false, true, {}};
  require_c2(ctx, "kwon");
  if (coincident_prototypes(ctx)) {
    out.value = kInf;
    out.flags.push_back("coincident-prototypes");
    return out;
  }
  double penalty = 0.0;
  for (std::size_t i = 0; i < ctx.v.rows(); ++i) {
    penalty += squared_distance(ctx.v.row(i), ctx.global_mean);
  }
  penalty /= static_cast<double>(ctx.u.c());
  out.value = (weighted_compactness(ctx) + penalty) /
              (static_cast<double>(ctx.u.n()) * ctx.min_proto_sqdist);
  return out;
}

IndexValue eval_v_p(const IndexContext& ctx) {
  IndexValue out{"v_p", "", 0.0, true, true, {}};
  require_c2(ctx, "v_p");
  const std::size_t c = ctx.u.c();
  double max_sum = 0.0;
  for (std::size_t k = 0; k < ctx.u.n(); ++k) {
    double mx = 0.0;
    for (std::size_t i = 0; i < c; ++i) mx = std::max(mx, ctx.u.u(i, k));
    max_sum += mx;
  }
  double overlap = 0.0;
  for (std::size_t i = 0; i + 1 < c; ++i) {
    for (std::size_t j = i + 1; j < c; ++j) {
      for (std::size_t k = 0; k < ctx.u.n(); ++k) {
        overlap += std::min(ctx.u.u(i, k), ctx.u.u(j, k));
      }
    }
  }
  double pair_count = static_cast<double>(c) * static_cast<double>(c - 1);
  out.value = (max_sum - 2.0 / pair_count * overlap) / static_cast<double>(ctx.u.n());
  return out;
}

IndexValue eval_davies_bouldin(const IndexContext& ctx) {
  const bool paper = ctx.opts.variant != "standard";
  IndexValue out{"davies_bouldin", paper ? "paper" : "standard", 0.0, false, true, {}};
  require_c2(ctx, "davies_bouldin");
  if (coincident_prototypes(ctx)) {
    out.value = kInf;
    out.flags.push_back("coincident-prototypes");
    return out;
  }
  const std::size_t c = ctx.u.c();
  for (std::size_t i = 0; i < c; ++i) {
    if (ctx.sizes[i] == 0) {
      out.defined = false;
      out.flags.push_back("empty-cluster-" + std::to_string(i));
      return out;
    }
  }
  std::vector<double> scatter_sum(c, 0.0);  // sum_{x in X_i} d(x, v_i)
  for (std::size_t k = 0; k < ctx.u.n(); ++k) {
    scatter_sum[ctx.labels[k]] += dist(ctx.data.features().row(k), ctx.v.row(ctx.labels[k]));
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < c; ++i) {
    double worst = -kInf;
    for (std::size_t j = 0; j < c; ++j) {
      if (j == i) continue;
      double sep = dist(ctx.v.row(i), ctx.v.row(j));
      double term;
      if (paper) {
        term = scatter_sum[i] / (sep * static_cast<double>(ctx.sizes[i])) +
               scatter_sum[j] / (sep * static_cast<double>(ctx.sizes[j]));
      } else {
        term = (scatter_sum[i] / static_cast<double>(ctx.sizes[i]) +
                scatter_sum[j] / static_cast<double>(ctx.sizes[j])) /
               sep;
      }
      worst = std::max(worst, term);
    }
    acc += worst;
  }
  out.value = paper ? acc / (static_cast<double>(ctx.u.n()) * static_cast<double>(c))
                    : acc / static_cast<double>(c);
  return out;
}

IndexValue eval_fs(const IndexContext& ctx) {
  IndexValue out{"fs", "", 0.0, false, true, {}};
  double compact = 0.0;
  double spread = 0.0;
  for (std::size_t i = 0; i < ctx.u.c(); ++i) {
    double vbar_term = squared_distance(ctx.v.row(i), ctx.prototype_mean);
    for (std::size_t k = 0; k < ctx.u.n(); ++k) {
      double w = std::pow(ctx.u.u(i, k), ctx.opts.m);
      compact += w * squared_distance(ctx.data.features().row(k), ctx.v.row(i));
      spread += w * vbar_term;
    }
  }
  out.value = compact - spread;
  return out;
}

IndexValue eval_silhouette(const IndexContext& ctx) {
  const bool paper = ctx.opts.variant != "standard";
  IndexValue out{"silhouette", paper ? "paper" : "standard", 0.0, true, true, {}};
  require_c2(ctx, "silhouette");
  const std::size_t n = ctx.u.n();
  const std::size_t c = ctx.u.c();
  const Matrix& x = ctx.data.features();

  std::vector<double> per_cluster(c, 0.0);
  std::size_t scored = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t own = ctx.labels[k];
    if (ctx.sizes[own] < 2) {
      out.flags.push_back("singleton-skipped-" + std::to_string(k));
      continue;
    }
    double a = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
      if (l == k || ctx.labels[l] != own) continue;
      a += dist(x.row(k), x.row(l));
    }
    a /= static_cast<double>(ctx.sizes[own] - 1);
    double b = kInf;
    for (std::size_t j = 0; j < c; ++j) {
      if (j == own || ctx.sizes[j] == 0) continue;
      double mean_d = 0.0;
      for (std::size_t l = 0; l < n; ++l) {
        if (ctx.labels[l] != j) continue;
        mean_d += dist(x.row(k), x.row(l));
      }
      b = std::min(b, mean_d / static_cast<double>(ctx.sizes[j]));
    }
    if (b == kInf) {
      out.flags.push_back("no-other-cluster-" + std::to_string(k));
      continue;
    }
    double s = (b - a) / std::max(a, b);
    ++scored;
    per_cluster[own] += s;
  }
  if (scored == 0) {
    out.defined = false;
    out.flags.push_back("no-scorable-objects");
    return out;
  }
  if (paper) {
    double acc = 0.0;
    for (std::size_t i = 0; i < c; ++i) {
      if (ctx.sizes[i] == 0) continue;
      acc += per_cluster[i] / static_cast<double>(ctx.sizes[i]);
    }
    out.value = acc / (static_cast<double>(n) * static_cast<double>(c));
  } else {
    double acc = 0.0;
    for (std::size_t i = 0; i < c; ++i) acc += per_cluster[i];
    out.value = acc / static_cast<double>(n);
  }
  return out;
}

IndexValue eval_index_i(const IndexContext& ctx) {
  IndexValue out{"index_i", "", 0.0, true, true, {}};
  require_c2(ctx, "index_i");
  double max_sep = 0.0;
  for (std::size_t i = 0; i < ctx.v.rows(); ++i) {
    for (std::size_t j = i + 1; j < ctx.v.rows(); ++j) {
      max_sep = std::max(max_sep, dist(ctx.v.row(i), ctx.v.row(j)));
    }
  }
  double scatter = 0.0;
  double compact = 0.0;
  for (std::size_t k = 0; k < ctx.u.n(); ++k) {
    scatter += dist(ctx.data.features().row(k), ctx.global_mean);
    compact += dist(ctx.data.features().row(k), ctx.v.row(ctx.labels[k]));
  }
  double denom = static_cast<double>(ctx.u.n()) * static_cast<double>(ctx.u.c()) * compact;
  if (denom == 0.0) {
    out.value = kInf;
    out.flags.push_back("zero-compactness");
    return out;
  }
  out.value = max_sep * scatter / denom;
  return out;
}

IndexValue eval_dunn(const IndexContext& ctx) {
  IndexValue out{"dunn", "", 0.0, true, true, {}};
  require_c2(ctx, "dunn");
  for (std::size_t i = 0; i < ctx.u.c(); ++i) {
    if (ctx.sizes[i] == 0) {
      out.defined = false;
      out.flags.push_back("empty-cluster-" + std::to_string(i));
      return out;
    }
  }
  const Matrix& x = ctx.data.features();
  double min_inter = kInf;
  double max_diam = 0.0;
  for (std::size_t k = 0; k < ctx.u.n(); ++k) {
    for (std::size_t l = k + 1; l < ctx.u.n(); ++l) {
      double d = dist(x.row(k), x.row(l));
      if (ctx.labels[k] == ctx.labels[l]) {
        max_diam = std::max(max_diam, d);
      } else {
        min_inter = std::min(min_inter, d);
      }
    }
  }
  if (max_diam == 0.0) {
    out.value = kInf;
    out.flags.push_back("zero-diameter");
    return out;
  }
  out.value = min_inter / max_diam;
  return out;
}

IndexValue eval_calinski_harabasz(const IndexContext& ctx) {
  IndexValue out{"calinski_harabasz", "", 0.0, true, true, {}};
  require_c2(ctx, "calinski_harabasz");
  double between = 0.0;
  double within = 0.0;
  for (std::size_t i = 0; i < ctx.u.c(); ++i) {
    double sep = squared_distance(ctx.v.row(i), ctx.global_mean);
    for (std::size_t k = 0; k < ctx.u.n(); ++k) {
      double w = ctx.u.u(i, k);
      between += w * w * sep;
      within += w * w * squared_distance(ctx.v.row(i), ctx.data.features().row(k));
    }
  }
  const double n = static_cast<double>(ctx.u.n());
  const double c = static_cast<double>(ctx.u.c());
  if (within == 0.0) {
    out.value = kInf;
    out.flags.push_back("zero-compactness");
    return out;
  }
  out.value = (n - c) * between / ((c - 1.0) * within);
  return out;
}

IndexValue eval_partition_coefficient(const IndexContext& ctx) {
  IndexValue out{"partition_coefficient", "", 0.0, true, true, {}};
  double acc = 0.0;
  for (std::size_t i = 0; i < ctx.u.c(); ++i) {
    for (std::size_t k = 0; k < ctx.u.n(); ++k) acc += ctx.u.u(i, k) * ctx.u.u(i, k);
  }
  out.value = acc / static_cast<double>(ctx.u.n());
  return out;
}

IndexValue eval_partition_entropy(const IndexContext& ctx) {
  IndexValue out{"partition_entropy", "", 0.0, false, true, {}};
  double acc = 0.0;
  for (std::size_t i = 0; i < ctx.u.c(); ++i) {
    for (std::size_t k = 0; k < ctx.u.n(); ++k) {
      double u = ctx.u.u(i, k);
      if (u > 0.0) acc += u * std::log(u);
    }
  }
  out.value = -acc / static_cast<double>(ctx.u.n());
  return out;
}

}  // namespace

IndexValue xie_beni(const DataSet& data, const Matrix& prototypes, const Partition& u,
                    double tol) {
  IndexOptions opts;
  opts.tol = tol;
  return eval_xie_beni(make_context(data, prototypes, u, opts));
}

const std::vector<std::string>& index_names() {
  static const std::vector<std::string> names = {
      "xie_beni",    "kwon",     "v_p",  "davies_bouldin",
      "fs",          "silhouette", "index_i", "dunn",
      "calinski_harabasz", "partition_coefficient", "partition_entropy"};
  return names;
}

IndexValue compute_index(const std::string& name, const DataSet& data, const Matrix& prototypes,
                         const Partition& u, const IndexOptions& opts) {
  IndexContext ctx = make_context(data, prototypes, u, opts);
  if (name == "xie_beni") return eval_xie_beni(ctx);
  if (name == "kwon") return eval_kwon(ctx);
  if (name == "v_p") return eval_v_p(ctx);
  if (name == "davies_bouldin") return eval_davies_bouldin(ctx);
  if (name == "fs") return eval_fs(ctx);
  if (name == "silhouette") return eval_silhouette(ctx);
  if (name == "index_i") return eval_index_i(ctx);
  if (name == "dunn") return eval_dunn(ctx);
  if (name == "calinski_harabasz") return eval_calinski_harabasz(ctx);
  if (name == "partition_coefficient") return eval_partition_coefficient(ctx);
  if (name == "partition_entropy") return eval_partition_entropy(ctx);
  throw std::domain_error("unknown validity index: " + name);
}

std::vector<IndexValue> all_indices(const DataSet& data, const Matrix& prototypes,
                                    const Partition& u, const IndexOptions& opts) {
  std::vector<IndexValue> out;
  for (const auto& name : index_names()) {
    try {
      out.push_back(compute_index(name, data, prototypes, u, opts));
    } catch (const std::domain_error& e) {
      IndexValue v;
      v.name = name;
      v.defined = false;
      v.flags.push_back(e.what());
      out.push_back(v);
    }
  }
  return out;
}

namespace {

struct Variant {
  std::string name;
  Matrix v;
  Partition u;
};

std::vector<Variant> improper_variants(const DataSet& data, std::size_t c) {
  const Matrix& x = data.features();
  Matrix centered(c, x.cols());
  std::vector<double> mean(x.cols(), 0.0);
  for (std::size_t k = 0; k < x.rows(); ++k) {
    for (std::size_t j = 0; j < x.cols(); ++j) mean[j] += x(k, j);
  }
  for (double& m : mean) m /= static_cast<double>(x.rows());
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) centered(i, j) = mean[j];
  }

  std::vector<Variant> variants;
  // Totally coincident prototypes; the equivalency-consistent memberships for
  // fully tied affinities are uniform.
  std::vector<double> uniform(c, 1.0 / static_cast<double>(c));
  variants.push_back({"coincident", centered, make_uninformative(uniform, x.rows())});

  // Uninformative partition with distinct column weights; the weighted means
  // collapse onto the global mean.
  std::vector<double> pi(c);
  double total = 0.0;
  for (std::size_t i = 0; i < c; ++i) {
    pi[i] = static_cast<double>(i + 1);
    total += pi[i];
  }
  for (double& p : pi) p /= total;
  variants.push_back({"uninformative", centered, make_uninformative(pi, x.rows())});

  variants.push_back({"absolute_uninformative", centered, make_uninformative(uniform, x.rows())});
  return variants;
}

// Strictly worse than `proper` respecting the index direction.
bool worse(const IndexValue& variant, const IndexValue& proper) {
  if (!variant.defined || !proper.defined) return false;
  return variant.max_better ? variant.value < proper.value : variant.value > proper.value;
}

}  // namespace

AuditReport extreme_value_audit(const std::string& index, const DataSet& data,
                                const Matrix& proper_prototypes, const Partition& proper_u,
                                const IndexOptions& opts) {
  AuditReport report;
  report.index = index;
  report.proper_value = compute_index(index, data, proper_prototypes, proper_u, opts);
  report.all_conforming = true;
  for (const auto& variant : improper_variants(data, proper_u.c())) {
    AuditEntry entry;
    entry.variant_name = variant.name;
    try {
      entry.value = compute_index(index, data, variant.v, variant.u, opts);
    } catch (const std::domain_error& e) {
      entry.value.name = index;
      entry.value.defined = false;
      entry.value.flags.push_back(e.what());
    }
    entry.conforming = worse(entry.value, report.proper_value);
    report.all_conforming = report.all_conforming && entry.conforming;
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace axioclust
