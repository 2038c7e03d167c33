#include "sparsecert/ric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace sparsecert {

std::uint64_t binomial(Index n, Index k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t c = 1;
  for (Index i = 1; i <= k; ++i) {
    // c * (n - k + i) / i stays integral at every step.
    const auto num = static_cast<std::uint64_t>(n - k + i);
    const auto g = std::gcd(c, static_cast<std::uint64_t>(i));
    const std::uint64_t c_red = c / g;
    const std::uint64_t den = static_cast<std::uint64_t>(i) / g;
    const std::uint64_t num_red = num / den;
    if (num_red != 0 && c_red > kMax / num_red) return kMax;
    c = c_red * num_red;
  }
  return c;
}

double support_delta(const Matrix& gram, const std::vector<Index>& subset) {
  const auto k = static_cast<Index>(subset.size());
  if (k == 1) return std::abs(gram(subset[0], subset[0]) - 1.0);
  Matrix g(k, k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) g(i, j) = gram(subset[static_cast<std::size_t>(i)], subset[static_cast<std::size_t>(j)]);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(g, Eigen::EigenvaluesOnly);
  const Vector& lambda = eig.eigenvalues();  // ascending
  return std::max(lambda(k - 1) - 1.0, 1.0 - lambda(0));
}

namespace {

void check_order(const SensingMatrix& phi, Index k, std::uint64_t cap) {
  if (k < 1 || k > phi.m()) {
    throw Error(ErrorCode::InvalidSparsity, "RIC order must lie in [1, m]");
  }
  const std::uint64_t count = binomial(phi.n(), k);
  if (count > cap) {
    throw Error(ErrorCode::EnumerationTooLarge,
                "C(" + std::to_string(phi.n()) + ", " + std::to_string(k) + ") = " +
                    std::to_string(count) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

RicEstimate exact_ric(const SensingMatrix& phi, Index k, std::uint64_t cap) {
  check_order(phi, k, cap);
  const Matrix gram = phi.matrix().transpose() * phi.matrix();
  double delta = 0.0;
  const std::uint64_t visited = for_each_combination(phi.n(), k, [&](const std::vector<Index>& s) {
    delta = std::max(delta, support_delta(gram, s));
    return true;
  });
  return {k, delta, RicMethod::ExactEnumeration, visited};
}

std::optional<double> exact_ric_if_below(const SensingMatrix& phi, Index k, double threshold,
                                         bool inclusive, std::uint64_t cap) {
  check_order(phi, k, cap);
  const Matrix gram = phi.matrix().transpose() * phi.matrix();
  double delta = 0.0;
  bool ok = true;
  for_each_combination(phi.n(), k, [&](const std::vector<Index>& s) {
    delta = std::max(delta, support_delta(gram, s));
    ok = inclusive ? delta <= threshold : delta < threshold;
    return ok;
  });
  if (!ok) return std::nullopt;
  return delta;
}

RicEstimate monte_carlo_ric_lower(const SensingMatrix& phi, Index k, std::uint64_t trials,
                                  std::uint64_t seed) {
  if (k < 1 || k > phi.n()) throw Error(ErrorCode::InvalidSparsity, "RIC order must lie in [1, n]");
  if (trials < 1) throw Error(ErrorCode::InvalidDimensions, "monte_carlo_ric_lower needs trials >= 1");
  const Matrix gram = phi.matrix().transpose() * phi.matrix();
  Rng rng(seed);
  std::vector<Index> pool(static_cast<std::size_t>(phi.n()));
  double delta = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (Index i = 0; i < phi.n(); ++i) pool[static_cast<std::size_t>(i)] = i;
    for (Index i = 0; i < k; ++i) {
      const auto j = i + static_cast<Index>(rng.below(static_cast<std::uint64_t>(phi.n() - i)));
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    std::vector<Index> s(pool.begin(), pool.begin() + k);
    std::sort(s.begin(), s.end());
    delta = std::max(delta, support_delta(gram, s));
  }
  return {k, delta, RicMethod::MonteCarloLowerBound, trials};
}

// ---------------------------------------------------------------------------
// Bound catalog

std::string_view to_string(RicBound b) {
  switch (b) {
    case RicBound::DavenportWakin: return "davenport_wakin";
    case RicBound::HuangZhu: return "huang_zhu";
    case RicBound::MoShen: return "mo_shen";
    case RicBound::Proposed: return "proposed";
    case RicBound::Conjectured: return "conjectured";
  }
  return "?";
}

RicBound parse_ric_bound(std::string_view name) {
  for (auto b : {RicBound::DavenportWakin, RicBound::HuangZhu, RicBound::MoShen, RicBound::Proposed,
                 RicBound::Conjectured}) {
    if (name == to_string(b)) return b;
  }
  throw Error(ErrorCode::UnknownBound, "unknown RIC bound '" + std::string(name) + "'");
}

double ric_bound(RicBound b, Index k) {
  if (k < 1) throw Error(ErrorCode::InvalidSparsity, "bound needs k >= 1");
  const double kk = static_cast<double>(k);
  const double rk = std::sqrt(kk);
  switch (b) {
    case RicBound::DavenportWakin: return 1.0 / (3.0 * rk);
    case RicBound::HuangZhu: return 1.0 / (1.0 + std::sqrt(2.0 * kk));
    case RicBound::MoShen: return 1.0 / (rk + 1.0);
    case RicBound::Proposed: return (std::sqrt(4.0 * kk + 1.0) - 1.0) / (2.0 * kk);
    case RicBound::Conjectured: return 1.0 / rk;
  }
  throw Error(ErrorCode::UnknownBound, "unknown RIC bound");
}

std::string_view to_string(AngleBound b) {
  switch (b) {
    case AngleBound::Proposed: return "proposed";
    case AngleBound::PlaneGeometry: return "plane_geometry";
    case AngleBound::Algebraic: return "algebraic";
  }
  return "?";
}

AngleBound parse_angle_bound(std::string_view name) {
  for (auto b : {AngleBound::Proposed, AngleBound::PlaneGeometry, AngleBound::Algebraic}) {
    if (name == to_string(b)) return b;
  }
  throw Error(ErrorCode::UnknownBound, "unknown angle bound '" + std::string(name) + "'");
}

double angle_bound(AngleBound b, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorCode::InvalidDelta, "angle bound needs 0 < delta < 1");
  switch (b) {
    case AngleBound::Proposed: return delta;
    case AngleBound::PlaneGeometry: return delta / std::sqrt(1.0 - delta * delta);
    case AngleBound::Algebraic: return delta / (1.0 - delta);
  }
  throw Error(ErrorCode::UnknownBound, "unknown angle bound");
}

// ---------------------------------------------------------------------------
// Near-orthogonality

SparsePair draw_orthogonal_sparse_pair(Index n, Index k, Rng& rng) {
  if (k < 2) throw Error(ErrorCode::InvalidSparsity, "orthogonal pairs need k >= 2");
  if (n < 2) throw Error(ErrorCode::InvalidDimensions, "orthogonal pairs need n >= 2");
  const Index kmax = std::min(k, n);
  const Index s = 2 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(kmax - 1)));

  std::vector<Index> pool(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  for (Index i = 0; i < s; ++i) {
    const auto j = i + static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }

  SparsePair p{Vector::Zero(n), Vector::Zero(n)};
  if (rng.coin()) {
    // Disjoint supports: split the drawn indices into two nonempty halves.
    const Index split = 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(s - 1)));
    for (Index i = 0; i < split; ++i) p.u(pool[static_cast<std::size_t>(i)]) = rng.normal();
    for (Index i = split; i < s; ++i) p.v(pool[static_cast<std::size_t>(i)]) = rng.normal();
    return p;
  }
  // Shared support, v orthogonalized against u.
  for (;;) {
    for (Index i = 0; i < s; ++i) {
      p.u(pool[static_cast<std::size_t>(i)]) = rng.normal();
      p.v(pool[static_cast<std::size_t>(i)]) = rng.normal();
    }
    p.v -= (p.u.dot(p.v) / p.u.squaredNorm()) * p.u;
    p.v -= (p.u.dot(p.v) / p.u.squaredNorm()) * p.u;
    if (p.v.norm() > 1e-8 * p.u.norm()) return p;
  }
}

double verify_near_orthogonality(const SensingMatrix& phi, Index k, std::uint64_t trials,
                                 std::uint64_t seed) {
  if (k < 2) throw Error(ErrorCode::InvalidSparsity, "near-orthogonality check needs k >= 2");
  Rng rng(seed);
  double worst = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const SparsePair p = draw_orthogonal_sparse_pair(phi.n(), k, rng);
    worst = std::max(worst, abs_cosine(phi.matrix() * p.u, phi.matrix() * p.v));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Condition number and angle

ConditionAngleReport condition_angle(const Matrix& a) {
  if (a.rows() < a.cols() || a.cols() < 1) {
    throw Error(ErrorCode::InvalidDimensions, "condition_angle needs rows >= cols >= 1");
  }
  const Vector s = singular_values(a);
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (!(smax > 0.0) || smin <= kRankTol * smax) {
    throw Error(ErrorCode::RankDeficient, "condition_angle: matrix is rank deficient");
  }
  ConditionAngleReport r;
  r.kappa = smax / smin;
  r.theta = 2.0 * std::atan(1.0 / r.kappa);
  return r;
}

double min_angle_grid(const Matrix& a, Index grid_points) {
  if (a.cols() != 2) throw Error(ErrorCode::UnsupportedShape, "min_angle_grid needs exactly 2 columns");
  if (grid_points < 8) throw Error(ErrorCode::InvalidDimensions, "min_angle_grid needs >= 8 grid points");
  condition_angle(a);  // rank check
  double best = std::numbers::pi;
  const Vector c0 = a.col(0);
  const Vector c1 = a.col(1);
  for (Index i = 0; i < grid_points; ++i) {
    const double t = std::numbers::pi * static_cast<double>(i) / static_cast<double>(grid_points);
    const double ct = std::cos(t);
    const double st = std::sin(t);
    best = std::min(best, angle_between(ct * c0 + st * c1, -st * c0 + ct * c1));
  }
  return best;
}

GuaranteeCertificate check_recovery_guarantee(const SensingMatrix& phi, Index k, RicBound b,
                                              std::uint64_t cap) {
  GuaranteeCertificate c;
  c.k = k;
  c.order = k + 1;
  c.delta = exact_ric(phi, k + 1, cap).delta;
  c.bound_name = std::string(to_string(b));
  c.bound_value = ric_bound(b, k);
  c.guaranteed = c.delta < c.bound_value;
  c.conjectural = b == RicBound::Conjectured;
  return c;
}

}  // namespace sparsecert
