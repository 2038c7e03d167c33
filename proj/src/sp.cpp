#include "sparsecert/sp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sparsecert {

namespace {

struct Fit {
  SupportSet support;
  Vector coeffs;
  Vector residual;
};

Fit fit_on(const Matrix& a, const Vector& y, SupportSet s) {
  if (s.size() > a.rows()) {
    throw Error(ErrorCode::RankDeficient,
                "subspace_pursuit: " + std::to_string(s.size()) + " candidate columns exceed " +
                    std::to_string(a.rows()) + " rows");
  }
  const Matrix sub = submatrix(a, s);
  Fit f{std::move(s), least_squares(sub, y), Vector()};
  f.residual = y - sub * f.coeffs;
  return f;
}

double missed(const std::optional<SparseSignal>& x, const SupportSet& omega) {
  const SupportSet& t = x->support();
  double acc = 0.0;
  for (Index i = 0; i < t.size(); ++i) {
    if (!omega.contains(t[i])) acc += x->values()(i) * x->values()(i);
  }
  return std::sqrt(acc);
}

}  // namespace

SpRun subspace_pursuit(const SensingMatrix& phi, const Vector& y, const SpConfig& config,
                       const std::optional<SparseSignal>& true_x) {
  const Index n = phi.n();
  const Index k = config.k;
  if (y.size() != phi.m()) throw Error(ErrorCode::InvalidDimensions, "sp: measurement length != rows");
  require_finite(y, "measurement");
  if (k < 1 || k > n) throw Error(ErrorCode::InvalidSparsity, "sp: k must lie in [1, n]");
  if (true_x && true_x->ambient() != n) throw Error(ErrorCode::InvalidDimensions, "sp: true signal length != n");
  const std::uint64_t combos = binomial(n, k);
  const Index default_cap = combos >= 100 ? 100 : static_cast<Index>(combos) + 1;
  const Index cap = config.max_iterations.value_or(default_cap);
  if (cap < 1) throw Error(ErrorCode::InvalidDimensions, "sp: max_iterations must be >= 1");

  const Matrix& a = phi.matrix();
  const double y_norm = y.norm();
  const double zero_tol = config.zero_residual_tol * y_norm;

  SpRun run;
  SpTrace& tr = run.trace;
  SolverResult& res = run.result;
  tr.residual_norms.push_back(y_norm);
  if (true_x) tr.missed_energy.push_back(true_x->values().norm());

  auto record = [&](const Fit& f) {
    tr.support_per_iteration.push_back(f.support);
    tr.residual_norms.push_back(f.residual.norm());
    if (true_x) tr.missed_energy.push_back(missed(true_x, f.support));
  };

  // Initialization: top-k correlations with y.
  Fit current = fit_on(a, y, top_k_magnitudes(a.transpose() * y, k, n));
  record(current);
  Fit previous = current;
  Index iterations = 1;
  HaltReason halt = HaltReason::IterationBudget;
  bool rolled_back = false;

  if (tr.residual_norms.back() <= zero_tol) {
    halt = HaltReason::ZeroResidual;
  } else {
    while (iterations < cap) {
      const SupportSet added = top_k_magnitudes(a.transpose() * current.residual, k, n);
      const SupportSet expanded = added.unite(current.support);
      tr.expanded_supports.push_back(expanded);
      const Fit wide = fit_on(a, y, expanded);
      const SupportSet pruned = top_k_magnitudes(wide.coeffs, k, n, expanded.indices());

      previous = std::move(current);
      current = fit_on(a, y, pruned);
      record(current);
      ++iterations;

      const double r_now = tr.residual_norms.back();
      const double r_prev = tr.residual_norms[tr.residual_norms.size() - 2];
      if (r_now >= r_prev) {
        halt = HaltReason::StoppingCriterion;
        rolled_back = config.rollback_on_stop;
        break;
      }
      if (r_now <= zero_tol) {
        halt = HaltReason::ZeroResidual;
        break;
      }
    }
  }

  const Fit& out = rolled_back ? previous : current;
  res.estimate = SparseSignal::from_dense(embed(out.coeffs, out.support));
  res.support_trace = tr.support_per_iteration;
  res.residual_norms = tr.residual_norms;
  res.iterations = iterations;
  res.halted_by = halt;
  return run;
}

// ---------------------------------------------------------------------------
// Constants

namespace {

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorCode::InvalidDelta, "SP constants need 0 < delta < 1");
}

double alpha_of(double d) {
  const double ratio = (1.0 + d) / (1.0 - d);
  return (2.0 * d / (1.0 - d)) * std::sqrt(1.0 + d * d * ratio) * std::sqrt(1.0 + 4.0 * d * d * ratio);
}

}  // namespace

double sp_margin(double delta) {
  check_delta(delta);
  return std::sqrt(1.0 - delta) - std::sqrt(1.0 + delta) * alpha_of(delta);
}

SpConstants sp_constants(double delta) {
  check_delta(delta);
  const double d = delta;
  const double ratio = (1.0 + d) / (1.0 - d);
  SpConstants c;
  c.delta = d;
  c.alpha = alpha_of(d);
  c.beta = (2.0 * std::sqrt(1.0 + d) / (1.0 - d)) * std::sqrt(1.0 + 4.0 * d * d * ratio) +
           2.0 / std::sqrt(1.0 - d);
  c.margin = std::sqrt(1.0 - d) - std::sqrt(1.0 + d) * c.alpha;
  if (c.margin > 0.0) {
    c.c_k = (1.0 + d * std::sqrt(1.0 + d) / std::sqrt(1.0 - d)) *
                (2.0 + std::sqrt(1.0 + d) * c.beta) / c.margin +
            1.0 / std::sqrt(1.0 - d);
  }
  c.c_prime_k = (1.0 + d + d * d) / (d * (1.0 - d));
  c.c_bar_k = 2.0 * (7.0 - 9.0 * d + 7.0 * d * d - d * d * d) / std::pow(1.0 - d, 4);
  return c;
}

double SpConstants::require_c_k() const {
  if (!c_k) {
    throw Error(ErrorCode::GuaranteeInapplicable,
                "sqrt(1-d) <= sqrt(1+d) alpha at delta = " + std::to_string(delta));
  }
  return *c_k;
}

double SpConstants::terminal_missed_energy_factor() const {
  if (!(margin > 0.0)) {
    throw Error(ErrorCode::GuaranteeInapplicable,
                "sqrt(1-d) <= sqrt(1+d) alpha at delta = " + std::to_string(delta));
  }
  return (2.0 + std::sqrt(1.0 + delta) * beta) / margin;
}

double sp_margin_root(double lo, double hi, double tol) {
  double flo = sp_margin(lo);
  const double fhi = sp_margin(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw Error(ErrorCode::GuaranteeInapplicable, "sp_margin_root: no sign change on the bracket");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = sp_margin(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

bool sp_guarantee(double delta_3k) {
  if (!(delta_3k >= 0.0)) throw Error(ErrorCode::InvalidDelta, "delta_3k must be >= 0");
  return delta_3k <= kSpDeltaBound;
}

GuaranteeCertificate check_sp_guarantee(const SensingMatrix& phi, Index k, std::uint64_t cap) {
  GuaranteeCertificate c;
  c.k = k;
  c.order = 3 * k;
  c.delta = exact_ric(phi, 3 * k, cap).delta;
  c.bound_name = "proposed_sp";
  c.bound_value = kSpDeltaBound;
  c.guaranteed = sp_guarantee(c.delta);
  return c;
}

}  // namespace sparsecert
