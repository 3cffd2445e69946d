#include "axioclust/partition.hpp"

#include <cmath>
#include <stdexcept>

#include "axioclust/ties.hpp"

namespace axioclust {

std::string to_string(PartitionKind kind) {
  switch (kind) {
    case PartitionKind::hard: return "hard";
    case PartitionKind::soft: return "soft";
    case PartitionKind::possibilistic: return "possibilistic";
  }
  return "?";
}

PartitionKind partition_kind_from_string(const std::string& name) {
  if (name == "hard") return PartitionKind::hard;
  if (name == "soft") return PartitionKind::soft;
  if (name == "possibilistic") return PartitionKind::possibilistic;
  throw std::domain_error("unknown partition kind: " + name);
}

std::string to_string(PartitionTop top) {
  switch (top) {
    case PartitionTop::proper: return "proper";
    case PartitionTop::overlapping: return "overlapping";
    case PartitionTop::improper: return "improper";
  }
  return "?";
}

namespace {

ValidationReport fail(std::string constraint, std::size_t row, std::size_t col) {
  return ValidationReport{false, std::move(constraint), row, col};
}

}  // namespace

ValidationReport validate_partition(const Partition& p, double eps) {
  const Matrix& u = p.u;
  const std::size_t c = p.c();
  const std::size_t n = p.n();
  if (c < 1 || n < 1) throw structural_error("partition matrix is empty");

  if (p.kind == PartitionKind::hard || p.kind == PartitionKind::soft) {
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        double v = u(i, k);
        if (p.kind == PartitionKind::hard) {
          if (!nearly_equal(v, 0.0, eps) && !nearly_equal(v, 1.0, eps)) {
            return fail("entries in {0,1}", i, k);
          }
        } else {
          if (v < -eps || v > 1.0 + eps) return fail("entries in [0,1]", i, k);
        }
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      double sum = 0.0;
      for (std::size_t i = 0; i < c; ++i) sum += u(i, k);
      if (!nearly_equal(sum, 1.0, eps)) return fail("column sums to 1", 0, k);
    }
    for (std::size_t i = 0; i < c; ++i) {
      double sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) sum += u(i, k);
      if (p.kind == PartitionKind::hard) {
        // Row sums live in [1, n); the upper bound is waived for c = 1.
        if (sum < 1.0 - eps) return fail("row sum in [1, n)", i, 0);
        if (c >= 2 && sum > static_cast<double>(n - 1) + eps) return fail("row sum in [1, n)", i, 0);
      } else {
        if (sum <= eps) return fail("row sum in (0, n)", i, 0);
        if (c >= 2 && sum >= static_cast<double>(n) - eps) return fail("row sum in (0, n)", i, 0);
      }
    }
    return ValidationReport{};
  }

  // possibilistic
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (u(i, k) < -eps) return fail("entries >= 0", i, k);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < c; ++i) sum += u(i, k);
    if (sum <= eps) return fail("column sum > 0", 0, k);
  }
  for (std::size_t i = 0; i < c; ++i) {
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) sum += u(i, k);
    if (sum <= eps) return fail("row sum > 0", i, 0);
  }
  return ValidationReport{};
}

PartitionClass classify_partition(const Partition& p, double tol) {
  const Matrix& u = p.u;
  const std::size_t c = p.c();
  const std::size_t n = p.n();
  if (c < 1 || n < 1) throw structural_error("partition matrix is empty");

  PartitionClass out;

  std::vector<std::size_t> tied_columns;
  for (std::size_t k = 0; k < n; ++k) {
    if (!strict_optimum(u.col(k), /*maximize=*/true, tol)) tied_columns.push_back(k);
  }

  std::vector<bool> has_witness(c, false);
  std::vector<std::size_t> witness(c, 0);
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t k = 0; k < n && !has_witness[i]; ++k) {
      bool wins = true;
      for (std::size_t j = 0; j < c && wins; ++j) {
        if (j == i) continue;
        wins = strictly_greater(u(i, k), u(j, k), tol);
      }
      if (wins) {
        has_witness[i] = true;
        witness[i] = k;
      }
    }
  }

  std::vector<std::size_t> unwitnessed;
  for (std::size_t i = 0; i < c; ++i) {
    if (!has_witness[i]) unwitnessed.push_back(i);
  }

  if (!unwitnessed.empty()) {
    out.top = PartitionTop::improper;
    out.violations = unwitnessed;

    for (std::size_t i = 0; i < c && !out.covering; ++i) {
      for (std::size_t j = 0; j < c && !out.covering; ++j) {
        if (i == j) continue;
        bool dominated = true;
        for (std::size_t k = 0; k < n && dominated; ++k) {
          dominated = !strictly_greater(u(i, k), u(j, k), tol);
        }
        out.covering = dominated;
      }
    }
    for (std::size_t i = 0; i < c && !out.coincident; ++i) {
      for (std::size_t j = i + 1; j < c && !out.coincident; ++j) {
        bool equal = true;
        for (std::size_t k = 0; k < n && equal; ++k) {
          equal = nearly_equal(u(i, k), u(j, k), tol);
        }
        out.coincident = equal;
      }
    }
    out.uninformative = true;
    for (std::size_t k = 0; k < n && out.uninformative; ++k) {
      for (std::size_t i = 0; i < c && out.uninformative; ++i) {
        out.uninformative = nearly_equal(u(i, k), u(i, 0), tol);
      }
    }
    out.absolute_uninformative = true;
    const double inv_c = 1.0 / static_cast<double>(c);
    for (std::size_t i = 0; i < c && out.absolute_uninformative; ++i) {
      for (std::size_t k = 0; k < n && out.absolute_uninformative; ++k) {
        out.absolute_uninformative = nearly_equal(u(i, k), inv_c, tol);
      }
    }
    return out;
  }

  out.witnesses = witness;
  if (tied_columns.empty()) {
    out.top = PartitionTop::proper;
  } else {
    out.top = PartitionTop::overlapping;
    out.violations = tied_columns;
  }
  return out;
}

Partition make_uninformative(const std::vector<double>& pi, std::size_t n) {
  if (pi.empty() || n < 1) throw std::domain_error("make_uninformative: empty pi or n = 0");
  double sum = 0.0;
  for (double v : pi) {
    if (v < 0.0) throw std::domain_error("make_uninformative: pi has a negative entry");
    sum += v;
  }
  if (!nearly_equal(sum, 1.0, kValidationTol)) {
    throw std::domain_error("make_uninformative: pi does not sum to 1");
  }
  Partition p;
  p.kind = PartitionKind::soft;
  p.u = Matrix(pi.size(), n);
  for (std::size_t i = 0; i < pi.size(); ++i) {
    for (std::size_t k = 0; k < n; ++k) p.u(i, k) = pi[i];
  }
  return p;
}

HardAssignment hard_assignment(const Partition& p, double tol) {
  if (p.c() < 1 || p.n() < 1) throw structural_error("partition matrix is empty");
  HardAssignment out;
  out.labels.resize(p.n());
  for (std::size_t k = 0; k < p.n(); ++k) {
    ArgOpt best = arg_opt(p.u.col(k), /*maximize=*/true);
    out.labels[k] = best.index;
    if (best.gap <= tol) out.ties.push_back(k);
  }
  return out;
}

}  // namespace axioclust
