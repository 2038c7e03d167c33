#include "sparsecert/omp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace sparsecert {

std::string_view to_string(HaltReason h) {
  switch (h) {
    case HaltReason::IterationBudget: return "iteration_budget";
    case HaltReason::StoppingCriterion: return "stopping_criterion";
    case HaltReason::ZeroResidual: return "zero_residual";
  }
  return "?";
}

SupportSet top_k_magnitudes(const Vector& values, Index k, Index ambient, const std::vector<Index>& labels) {
  const Index len = values.size();
  k = std::min(k, len);
  std::vector<Index> order(static_cast<std::size_t>(len));
  std::iota(order.begin(), order.end(), Index{0});
  auto label = [&](Index i) { return labels.empty() ? i : labels[static_cast<std::size_t>(i)]; };
  std::partial_sort(order.begin(), order.begin() + k, order.end(), [&](Index a, Index b) {
    const double ma = std::abs(values(a));
    const double mb = std::abs(values(b));
    if (ma != mb) return ma > mb;
    return label(a) < label(b);
  });
  std::vector<Index> picked(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) picked[static_cast<std::size_t>(i)] = label(order[static_cast<std::size_t>(i)]);
  return SupportSet(ambient, std::move(picked));
}

SolverResult omp(const SensingMatrix& phi, const Vector& y, const OmpConfig& config) {
  const Index m = phi.m();
  const Index n = phi.n();
  if (y.size() != m) throw Error(ErrorCode::InvalidDimensions, "omp: measurement length != rows");
  require_finite(y, "measurement");
  if (!(config.epsilon >= 0.0)) throw Error(ErrorCode::InvalidDimensions, "omp: epsilon must be >= 0");
  const Index cap = config.max_iterations.value_or(m);
  if (cap < 0 || cap > m) throw Error(ErrorCode::InvalidDimensions, "omp: max_iterations must lie in [0, m]");
  if (config.mode == OmpMode::NoiselessK && (config.k < 0 || config.k > n)) {
    throw Error(ErrorCode::InvalidSparsity, "omp: K must lie in [0, n]");
  }

  const Matrix& a = phi.matrix();
  const double y_norm = y.norm();
  const double zero_tol = config.zero_residual_tol * y_norm;

  SolverResult out;
  Vector r = y;
  Vector coeffs(0);
  std::vector<Index> selected;
  std::vector<char> taken(static_cast<std::size_t>(n), 0);
  out.residual_norms.push_back(y_norm);

  for (;;) {
    const Index j = static_cast<Index>(selected.size());
    const double r_norm = out.residual_norms.back();
    const Vector corr = a.transpose() * r;

    if (config.mode == OmpMode::L2Stopping && r_norm <= config.epsilon) {
      out.halted_by = HaltReason::StoppingCriterion;
      break;
    }
    if (config.mode == OmpMode::LinfStopping && corr.cwiseAbs().maxCoeff() <= config.epsilon) {
      out.halted_by = HaltReason::StoppingCriterion;
      break;
    }
    if (config.mode == OmpMode::NoiselessK && j >= config.k) {
      out.halted_by = HaltReason::IterationBudget;
      break;
    }
    if (r_norm <= zero_tol) {
      out.halted_by = HaltReason::ZeroResidual;
      break;
    }
    if (j >= cap) {
      out.halted_by = HaltReason::IterationBudget;
      break;
    }

    // Selected columns are orthogonal to r; they are skipped so rounding can
    // never pick one twice.
    Index best = -1;
    double best_mag = -1.0;
    for (Index i = 0; i < n; ++i) {
      if (taken[static_cast<std::size_t>(i)]) continue;
      const double mag = std::abs(corr(i));
      if (mag > best_mag) {
        best_mag = mag;
        best = i;
      }
    }
    selected.push_back(best);
    taken[static_cast<std::size_t>(best)] = 1;

    SupportSet omega(n, selected);
    const Matrix sub = submatrix(a, omega);
    coeffs = least_squares(sub, y);
    r = y - sub * coeffs;
    out.residual_norms.push_back(r.norm());
    out.support_trace.push_back(std::move(omega));
  }

  out.iterations = static_cast<Index>(selected.size());
  const SupportSet final_support = selected.empty() ? SupportSet::empty(n) : out.support_trace.back();
  out.estimate = SparseSignal::from_dense(embed(coeffs, final_support));
  return out;
}

std::string_view to_string(OmpThreshold t) {
  switch (t) {
    case OmpThreshold::L2Prior: return "l2_prior";
    case OmpThreshold::L2Proposed: return "l2_proposed";
    case OmpThreshold::LinfPrior: return "linf_prior";
    case OmpThreshold::LinfProposed: return "linf_proposed";
  }
  return "?";
}

double omp_threshold(OmpThreshold t, Index k, double delta, double eps) {
  if (k < 1) throw Error(ErrorCode::InvalidSparsity, "threshold needs k >= 1");
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorCode::InvalidDelta, "threshold needs 0 < delta < 1");
  if (!(eps >= 0.0)) throw Error(ErrorCode::InvalidDimensions, "threshold needs eps >= 0");
  const double rk = std::sqrt(static_cast<double>(k));
  const bool prior = t == OmpThreshold::L2Prior || t == OmpThreshold::LinfPrior;
  const double denom = prior ? 1.0 - delta - rk * delta
                             : 1.0 - delta - std::sqrt(1.0 - delta) * rk * delta;
  if (!(denom > 0.0)) {
    throw Error(ErrorCode::GuaranteeInapplicable,
                std::string(to_string(t)) + ": delta too large for k = " + std::to_string(k));
  }
  double num = 0.0;
  switch (t) {
    case OmpThreshold::L2Prior:
    case OmpThreshold::L2Proposed: num = std::sqrt(1.0 + delta) + 1.0; break;
    case OmpThreshold::LinfPrior: num = rk + rk * std::sqrt(1.0 + delta); break;
    case OmpThreshold::LinfProposed: num = rk + 1.0; break;
  }
  return num * eps / denom;
}

}  // namespace sparsecert
