#pragma once

// Subspace Pursuit with the residual-increase stopping rule, plus the
// analytic constants behind its delta_{3K} <= 0.2412 recovery guarantee.

#include <optional>

#include "sparsecert/ric.hpp"
#include "sparsecert/solver.hpp"

namespace sparsecert {

/// RIC threshold on delta_{3K} for exact (noiseless) and stable (noisy) SP recovery.
inline constexpr double kSpDeltaBound = 0.2412;

struct SpConfig {
  Index k = 1;
  /// Defaults to min(100, C(n, k) + 1). C(n, k) + 1 is the worst-case halt bound.
  std::optional<Index> max_iterations;
  /// Report the previous iteration's estimate when the stopping rule fires.
  bool rollback_on_stop = false;
  double zero_residual_tol = 1e-12;
};

struct SpTrace {
  /// Omega^j for j = 1 .. iterations (size k each).
  std::vector<SupportSet> support_per_iteration;
  /// Expanded candidate sets for j = 2 .. iterations (size <= 2k, contain Omega^{j-1}).
  std::vector<SupportSet> expanded_supports;
  /// ||r^j||_2 for j = 0 .. iterations.
  std::vector<double> residual_norms;
  /// ||x_{T \ Omega^j}||_2 for j = 0 .. iterations (Omega^0 empty). Filled only
  /// when the true signal is supplied.
  std::vector<double> missed_energy;
};

struct SpRun {
  SolverResult result;
  SpTrace trace;
};

/// Runs while the residual norm strictly decreases. Halts when
/// ||r^j|| >= ||r^{j-1}||, on a zero residual, or at max_iterations.
/// `true_x` is used only to fill SpTrace::missed_energy.
SpRun subspace_pursuit(const SensingMatrix& phi, const Vector& y, const SpConfig& config,
                       const std::optional<SparseSignal>& true_x = std::nullopt);

/// Constants of the SP guarantees evaluated at delta = delta_{3K}.
struct SpConstants {
  double delta = 0.0;
  /// Per-iteration contraction factor of the missed signal energy.
  double alpha = 0.0;
  double beta = 0.0;
  /// sqrt(1 - delta) - sqrt(1 + delta) * alpha; c_k exists only when positive.
  double margin = 0.0;
  /// Error constant of the stable-recovery bound ||x - x_hat|| <= c_k ||w||.
  std::optional<double> c_k;
  /// (1 + d + d^2) / (d (1 - d)), the older stable-recovery constant.
  double c_prime_k = 0.0;
  /// 2 (7 - 9d + 7d^2 - d^3) / (1 - d)^4, the constant of the T_e-based bound.
  double c_bar_k = 0.0;

  /// c_k, or GuaranteeInapplicable if the margin is not positive.
  double require_c_k() const;
  /// Bound factor on ||x_{T \ Omega^l}|| / ||w|| at termination:
  /// (2 + sqrt(1 + d) beta) / margin. GuaranteeInapplicable if margin <= 0.
  double terminal_missed_energy_factor() const;
};

SpConstants sp_constants(double delta);

/// sqrt(1 - d) - sqrt(1 + d) alpha(d).
double sp_margin(double delta);

/// Root of sp_margin on [lo, hi] by bisection (sign change required).
double sp_margin_root(double lo = 0.2412, double hi = 0.25, double tol = 1e-14);

/// delta_3k <= 0.2412.
bool sp_guarantee(double delta_3k);

/// Exact delta_{3k} compared against 0.2412 (inclusive).
GuaranteeCertificate check_sp_guarantee(const SensingMatrix& phi, Index k,
                                        std::uint64_t cap = kEnumerationCap);

}  // namespace sparsecert
