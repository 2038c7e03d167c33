#pragma once

// Restricted isometry constants: exact enumeration, a Monte Carlo lower
// bound, the catalog of sufficient-condition bounds on delta_{K+1}, the
// near-orthogonality angle bounds, and the condition-number / angle identity
// kappa(A) = cot(theta(A) / 2).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sparsecert/sensing.hpp"

namespace sparsecert {

/// Largest number of size-k column subsets exact_ric will enumerate.
inline constexpr std::uint64_t kEnumerationCap = 2'000'000;

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(Index n, Index k);

/// Calls fn(indices) for every size-k subset of {0..n-1} in lexicographic
/// order. fn returns false to stop early. Returns the number of subsets visited.
template <class Fn>
std::uint64_t for_each_combination(Index n, Index k, Fn&& fn) {
  if (k < 0 || k > n) return 0;
  std::vector<Index> idx(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::uint64_t visited = 0;
  for (;;) {
    ++visited;
    if (!fn(static_cast<const std::vector<Index>&>(idx))) return visited;
    Index i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return visited;
    ++idx[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

enum class RicMethod { ExactEnumeration, MonteCarloLowerBound };

struct RicEstimate {
  Index order_k = 0;
  double delta = 0.0;
  RicMethod method = RicMethod::ExactEnumeration;
  std::uint64_t supports_examined = 0;
};

/// Two-sided isometry defect of one column subset:
/// max(lambda_max(G_S) - 1, 1 - lambda_min(G_S)) with G = Phi^T Phi.
double support_delta(const Matrix& gram, const std::vector<Index>& subset);

/// delta_k = max over |S| = k of support_delta. Throws EnumerationTooLarge
/// when C(n, k) exceeds `cap`.
RicEstimate exact_ric(const SensingMatrix& phi, Index k, std::uint64_t cap = kEnumerationCap);

/// Certification shortcut: enumerates like exact_ric but stops as soon as a
/// support violates the threshold. Returns the exact delta_k when
/// delta_k < threshold (or <= threshold if `inclusive`), nullopt otherwise.
std::optional<double> exact_ric_if_below(const SensingMatrix& phi, Index k, double threshold,
                                         bool inclusive = false, std::uint64_t cap = kEnumerationCap);

/// Max of support_delta over `trials` uniformly drawn size-k supports.
RicEstimate monte_carlo_ric_lower(const SensingMatrix& phi, Index k, std::uint64_t trials,
                                  std::uint64_t seed);

enum class RicBound { DavenportWakin, HuangZhu, MoShen, Proposed, Conjectured };

std::string_view to_string(RicBound b);
/// Accepts davenport_wakin, huang_zhu, mo_shen, proposed, conjectured.
RicBound parse_ric_bound(std::string_view name);

/// Sufficient-condition thresholds on delta_{K+1} for K-step OMP recovery:
///   davenport_wakin  1 / (3 sqrt k)
///   huang_zhu        1 / (1 + sqrt(2k))
///   mo_shen          1 / (sqrt k + 1)
///   proposed         (sqrt(4k + 1) - 1) / (2k)
///   conjectured      1 / sqrt k       (a conjectured limit, not a theorem)
double ric_bound(RicBound b, Index k);

enum class AngleBound { Proposed, PlaneGeometry, Algebraic };

std::string_view to_string(AngleBound b);
AngleBound parse_angle_bound(std::string_view name);

/// Upper bounds on |cos angle(Phi u, Phi v)| for orthogonal sparse u, v:
/// delta, delta / sqrt(1 - delta^2) and delta / (1 - delta). Requires 0 < delta < 1.
double angle_bound(AngleBound b, double delta);

struct SparsePair {
  Vector u;
  Vector v;
};

/// A random pair of orthogonal vectors whose joint support has between 2 and
/// k indices. Half the draws use disjoint supports; the other half share one
/// support and are Gram-orthogonalized.
SparsePair draw_orthogonal_sparse_pair(Index n, Index k, Rng& rng);

/// max |cos angle(Phi u, Phi v)| over `trials` pairs from draw_orthogonal_sparse_pair.
double verify_near_orthogonality(const SensingMatrix& phi, Index k, std::uint64_t trials,
                                 std::uint64_t seed);

struct ConditionAngleReport {
  double kappa = 1.0;
  double theta = 0.0;
};

/// kappa = sigma_max / sigma_min, theta = 2 arccot(kappa).
ConditionAngleReport condition_angle(const Matrix& a);

/// Brute-force minimum of angle(A (cos t, sin t), A (-sin t, cos t)) over a
/// uniform grid of t in [0, pi). Only two-column matrices are supported.
double min_angle_grid(const Matrix& a, Index grid_points);

struct GuaranteeCertificate {
  Index k = 0;
  /// RIC order the bound is stated for (k + 1 for OMP, 3k for SP).
  Index order = 0;
  double delta = 0.0;
  std::string bound_name;
  double bound_value = 0.0;
  bool guaranteed = false;
  /// Set when the bound is only conjectured to be sufficient.
  bool conjectural = false;
};

/// Compares exact delta_{k+1} against ric_bound(b, k) with strict inequality.
GuaranteeCertificate check_recovery_guarantee(const SensingMatrix& phi, Index k, RicBound b,
                                              std::uint64_t cap = kEnumerationCap);

}  // namespace sparsecert
