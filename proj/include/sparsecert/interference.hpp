#pragma once

// Interference nulling by orthogonal projection. With the interference
// support T_d known, Q = I - P_{T_d} removes every component of y lying in
// the span of Phi_{T_d}; recovery then works on the projected operator Q Phi.

#include <optional>
#include <string_view>

#include "sparsecert/ric.hpp"
#include "sparsecert/solver.hpp"

namespace sparsecert {

/// Q = I - Phi_{T_d} (Phi_{T_d}^T Phi_{T_d})^{-1} Phi_{T_d}^T. Empty T_d gives I.
Matrix interference_projector(const SensingMatrix& phi, const SupportSet& t_d);

/// y_bar = Q y.
Vector cancel(const SensingMatrix& phi, const SupportSet& t_d, const Vector& y);

enum class EffectiveRic { Davenport, PlaneGeometry, Proposed };

std::string_view to_string(EffectiveRic e);

/// Analytic RIC estimates of Q Phi given delta = delta_K of Phi:
///   davenport       min(1, d / (1 - d))
///   plane_geometry  min(1, d + d^2 / (1 + d))
///   proposed        min(1, d + d^2 (1 - d))
double effective_ric_estimate(EffectiveRic e, double delta);

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
  std::uint64_t supports_examined = 0;
};

struct EffectiveRicReport {
  double delta_k = 0.0;
  double delta_bar_a = 0.0;
  double delta_bar_g = 0.0;
  double delta_bar = 0.0;
  std::optional<double> empirical_lower;
  std::optional<double> empirical_upper;
};

EffectiveRicReport effective_ric_report(double delta_k, std::optional<FrameBounds> empirical = {});

/// Extreme squared singular values of (Q Phi)_S over every S disjoint from
/// T_d with |S| = k - |T_d|.
FrameBounds empirical_effective_frame(const SensingMatrix& phi, const SupportSet& t_d, Index k,
                                      std::uint64_t cap = kEnumerationCap);

struct ProjectionEnergy {
  /// ||P_S Phi x||^2
  double cos_energy = 0.0;
  /// ||(I - P_S) Phi x||^2
  double sin_energy = 0.0;
};

/// Splits ||Phi x||^2 into its parts inside and orthogonal to span(Phi_S).
/// x must be supported off S.
ProjectionEnergy projection_energy_split(const SensingMatrix& phi, const SupportSet& s,
                                         const SparseSignal& x);

enum class RecoveryMethod { Omp, Sp };

/// Projects y, drops the T_d columns, renormalizes the remaining columns of
/// Q Phi, runs noiseless OMP (k_residual iterations) or SP (sparsity
/// k_residual), and maps the estimate back to the original index space and
/// coefficient scale. A projected column with norm < 1e-8 throws DegenerateColumn.
SolverResult recover_after_cancellation(const SensingMatrix& phi, const SupportSet& t_d, const Vector& y,
                                        RecoveryMethod method, Index k_residual);

}  // namespace sparsecert
