#include "sparsecert/interference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sparsecert/omp.hpp"
#include "sparsecert/sp.hpp"

namespace sparsecert {

Matrix interference_projector(const SensingMatrix& phi, const SupportSet& t_d) {
  const Matrix p = orthogonal_projector(submatrix(phi, t_d));
  return Matrix::Identity(phi.m(), phi.m()) - p;
}

Vector cancel(const SensingMatrix& phi, const SupportSet& t_d, const Vector& y) {
  if (y.size() != phi.m()) throw Error(ErrorCode::InvalidDimensions, "cancel: measurement length != rows");
  if (t_d.is_empty()) return y;
  return interference_projector(phi, t_d) * y;
}

std::string_view to_string(EffectiveRic e) {
  switch (e) {
    case EffectiveRic::Davenport: return "davenport";
    case EffectiveRic::PlaneGeometry: return "plane_geometry";
    case EffectiveRic::Proposed: return "proposed";
  }
  return "?";
}

double effective_ric_estimate(EffectiveRic e, double d) {
  if (!(d > 0.0 && d < 1.0)) throw Error(ErrorCode::InvalidDelta, "effective RIC needs 0 < delta < 1");
  switch (e) {
    case EffectiveRic::Davenport: return std::min(1.0, d / (1.0 - d));
    case EffectiveRic::PlaneGeometry: return std::min(1.0, d + d * d / (1.0 + d));
    case EffectiveRic::Proposed: return std::min(1.0, d + d * d * (1.0 - d));
  }
  throw Error(ErrorCode::UnknownBound, "unknown effective RIC estimate");
}

EffectiveRicReport effective_ric_report(double delta_k, std::optional<FrameBounds> empirical) {
  EffectiveRicReport r;
  r.delta_k = delta_k;
  r.delta_bar_a = effective_ric_estimate(EffectiveRic::Davenport, delta_k);
  r.delta_bar_g = effective_ric_estimate(EffectiveRic::PlaneGeometry, delta_k);
  r.delta_bar = effective_ric_estimate(EffectiveRic::Proposed, delta_k);
  if (empirical) {
    r.empirical_lower = empirical->lower;
    r.empirical_upper = empirical->upper;
  }
  return r;
}

FrameBounds empirical_effective_frame(const SensingMatrix& phi, const SupportSet& t_d, Index k,
                                      std::uint64_t cap) {
  if (t_d.ambient() != phi.n()) throw Error(ErrorCode::InvalidSupport, "T_d ambient dimension != n");
  const Index free_count = k - t_d.size();
  if (free_count < 1) throw Error(ErrorCode::InvalidSparsity, "k must exceed |T_d|");
  const SupportSet rest = SupportSet::all(phi.n()).minus(t_d);
  if (free_count > rest.size()) throw Error(ErrorCode::InvalidSparsity, "k - |T_d| exceeds free columns");
  const std::uint64_t count = binomial(rest.size(), free_count);
  if (count > cap) throw Error(ErrorCode::EnumerationTooLarge, "admissible supports exceed cap");

  const Matrix qphi = interference_projector(phi, t_d) * submatrix(phi, rest);
  const Matrix gram = qphi.transpose() * qphi;
  FrameBounds fb;
  fb.lower = std::numeric_limits<double>::infinity();
  fb.upper = 0.0;
  fb.supports_examined = for_each_combination(rest.size(), free_count, [&](const std::vector<Index>& s) {
    const auto sz = static_cast<Index>(s.size());
    Matrix g(sz, sz);
    for (Index i = 0; i < sz; ++i)
      for (Index j = 0; j < sz; ++j) g(i, j) = gram(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]);
    Eigen::SelfAdjointEigenSolver<Matrix> eig(g, Eigen::EigenvaluesOnly);
    fb.lower = std::min(fb.lower, eig.eigenvalues()(0));
    fb.upper = std::max(fb.upper, eig.eigenvalues()(sz - 1));
    return true;
  });
  return fb;
}

ProjectionEnergy projection_energy_split(const SensingMatrix& phi, const SupportSet& s,
                                         const SparseSignal& x) {
  if (x.ambient() != phi.n() || s.ambient() != phi.n()) {
    throw Error(ErrorCode::InvalidDimensions, "projection_energy_split: dimension mismatch");
  }
  if (!s.disjoint(x.support())) throw Error(ErrorCode::InvalidSupport, "signal support overlaps S");
  const Vector image = phi.matrix() * x.dense();
  const Vector inside = orthogonal_projector(submatrix(phi, s)) * image;
  return {inside.squaredNorm(), (image - inside).squaredNorm()};
}

SolverResult recover_after_cancellation(const SensingMatrix& phi, const SupportSet& t_d, const Vector& y,
                                        RecoveryMethod method, Index k_residual) {
  auto solve = [&](const SensingMatrix& dict, const Vector& rhs) {
    if (method == RecoveryMethod::Omp) return omp(dict, rhs, OmpConfig::noiseless(k_residual));
    SpConfig cfg;
    cfg.k = k_residual;
    return subspace_pursuit(dict, rhs, cfg).result;
  };
  if (t_d.is_empty()) return solve(phi, y);

  const Vector y_bar = cancel(phi, t_d, y);
  const SupportSet keep = SupportSet::all(phi.n()).minus(t_d);
  Matrix qphi = interference_projector(phi, t_d) * submatrix(phi, keep);
  Vector scale(keep.size());
  for (Index j = 0; j < keep.size(); ++j) {
    scale(j) = qphi.col(j).norm();
    if (scale(j) < 1e-8) {
      throw Error(ErrorCode::DegenerateColumn,
                  "projected column " + std::to_string(keep[j]) + " has norm " + std::to_string(scale(j)));
    }
    qphi.col(j) /= scale(j);
  }
  const SolverResult inner = solve(SensingMatrix(std::move(qphi)), y_bar);

  // Map back: effective index j is original column keep[j], coefficient / scale(j).
  auto lift = [&](const SupportSet& s) {
    std::vector<Index> idx;
    for (Index i : s.indices()) idx.push_back(keep[i]);
    return SupportSet(phi.n(), std::move(idx));
  };
  SolverResult out;
  out.residual_norms = inner.residual_norms;
  out.iterations = inner.iterations;
  out.halted_by = inner.halted_by;
  for (const auto& s : inner.support_trace) out.support_trace.push_back(lift(s));
  Vector dense = Vector::Zero(phi.n());
  const SparseSignal& est = inner.estimate;
  for (Index i = 0; i < est.sparsity(); ++i) {
    const Index j = est.support()[i];
    dense(keep[j]) = est.values()(i) / scale(j);
  }
  out.estimate = SparseSignal::from_dense(dense);
  return out;
}

}  // namespace sparsecert
