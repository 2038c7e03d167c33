#pragma once

// Orthogonal Matching Pursuit with a noiseless K-step mode and the two noisy
// stopping rules (l2 residual norm, l-infinity residual correlation), plus
// the minimum-magnitude thresholds that guarantee noisy support recovery.

#include <optional>
#include <string_view>

#include "sparsecert/solver.hpp"

namespace sparsecert {

enum class OmpMode { NoiselessK, L2Stopping, LinfStopping };

struct OmpConfig {
  OmpMode mode = OmpMode::NoiselessK;
  /// Iteration count for NoiselessK.
  Index k = 0;
  /// epsilon_1 (L2Stopping) or epsilon_2 (LinfStopping).
  double epsilon = 0.0;
  /// Defaults to m; must not exceed m.
  std::optional<Index> max_iterations;
  /// ||r|| <= tol * ||y|| counts as an exact zero residual.
  double zero_residual_tol = 1e-12;

  static OmpConfig noiseless(Index k) { return {OmpMode::NoiselessK, k, 0.0, {}, 1e-12}; }
  static OmpConfig l2(double eps) { return {OmpMode::L2Stopping, 0, eps, {}, 1e-12}; }
  static OmpConfig linf(double eps) { return {OmpMode::LinfStopping, 0, eps, {}, 1e-12}; }
};

/// Each iteration selects argmax_i |<phi_i, r>| among unselected columns
/// (smallest index on ties), refits by least squares on the selected columns
/// and updates the residual. Noisy modes test their stopping rule on r^j
/// before every selection, including j = 0.
SolverResult omp(const SensingMatrix& phi, const Vector& y, const OmpConfig& config);

enum class OmpThreshold { L2Prior, L2Proposed, LinfPrior, LinfProposed };

std::string_view to_string(OmpThreshold t);

/// Minimum |x_i| above which OMP with the matching stopping rule recovers
/// the support, given delta = delta_{k+1} and the noise level eps:
///   l2_prior      (sqrt(1+d) + 1) eps / (1 - d - sqrt(k) d)
///   l2_proposed   (sqrt(1+d) + 1) eps / (1 - d - sqrt(1-d) sqrt(k) d)
///   linf_prior    (sqrt(k) + sqrt(k) sqrt(1+d)) eps / (1 - d - sqrt(k) d)
///   linf_proposed (sqrt(k) + 1) eps / (1 - d - sqrt(1-d) sqrt(k) d)
/// A nonpositive denominator throws GuaranteeInapplicable.
double omp_threshold(OmpThreshold t, Index k, double delta, double eps);

}  // namespace sparsecert
