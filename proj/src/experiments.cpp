#include "sparsecert/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <limits>
#include <numbers>
#include <ostream>

#include "sparsecert/interference.hpp"
#include "sparsecert/omp.hpp"
#include "sparsecert/ric.hpp"
#include "sparsecert/sp.hpp"

namespace sparsecert {

void RunManifest::write(std::ostream& out) const {
  out << "# command: " << command << '\n';
  for (const auto& [key, value] : parameters) out << "# param " << key << '=' << value << '\n';
  out << "# seed_base: " << seed_base << '\n';
  out << "# tool_version: " << tool_version << '\n';
  out << "# started_at: " << (started_at.empty() ? now_utc() : started_at) << '\n';
}

std::string now_utc() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// ---------------------------------------------------------------------------
// Tables

namespace {

std::vector<double> delta_grid(double lo, double hi, double step) {
  if (!(lo > 0.0 && lo < hi && hi < 1.0)) {
    throw Error(ErrorCode::InvalidDelta, "delta range must satisfy 0 < delta_min < delta_max < 1");
  }
  if (!(step > 0.0)) throw Error(ErrorCode::InvalidDelta, "delta step must be positive");
  std::vector<double> grid;
  for (std::uint64_t i = 0;; ++i) {
    const double d = lo + static_cast<double>(i) * step;
    if (d > hi + 1e-12) break;
    grid.push_back(std::min(d, hi));
  }
  return grid;
}

}  // namespace

void write_bounds_table(std::ostream& out, Index k_min, Index k_max) {
  if (k_min < 1 || k_max < k_min) throw Error(ErrorCode::InvalidSparsity, "need 1 <= k_min <= k_max");
  out << "k,bound_davenport_wakin,bound_huang_zhu,bound_mo_shen,bound_proposed,bound_conjectured\n";
  for (Index k = k_min; k <= k_max; ++k) {
    out << k;
    for (RicBound b : {RicBound::DavenportWakin, RicBound::HuangZhu, RicBound::MoShen, RicBound::Proposed,
                       RicBound::Conjectured}) {
      out << ',' << format_real(ric_bound(b, k));
    }
    out << '\n';
  }
}

void write_effective_ric_table(std::ostream& out, double delta_min, double delta_max, double step) {
  const auto grid = delta_grid(delta_min, delta_max, step);
  out << "delta,delta_bar_a,delta_bar_g,delta_bar_proposed\n";
  for (double d : grid) {
    const EffectiveRicReport r = effective_ric_report(d);
    out << format_real(d) << ',' << format_real(r.delta_bar_a) << ',' << format_real(r.delta_bar_g) << ','
        << format_real(r.delta_bar) << '\n';
  }
}

void write_sp_constants_table(std::ostream& out, double delta_min, double delta_max, double step) {
  const auto grid = delta_grid(delta_min, delta_max, step);
  out << "delta,alpha,beta,margin,c_k,c_prime_k,c_bar_k\n";
  for (double d : grid) {
    const SpConstants c = sp_constants(d);
    out << format_real(d) << ',' << format_real(c.alpha) << ',' << format_real(c.beta) << ','
        << format_real(c.margin) << ',' << format_real(c.c_k.value_or(std::numeric_limits<double>::quiet_NaN()))
        << ',' << format_real(c.c_prime_k) << ',' << format_real(c.c_bar_k) << '\n';
  }
}

// ---------------------------------------------------------------------------
// Sweeps

SensingMatrix draw_matrix(Ensemble e, Index m, Index n, double perturbation, std::uint64_t seed) {
  switch (e) {
    case Ensemble::Gaussian: return generate_gaussian_matrix(m, n, seed);
    case Ensemble::TightFrame: return generate_tight_frame_matrix(m, n, perturbation, seed);
    case Ensemble::Orthonormal:
      if (m != n) throw Error(ErrorCode::InvalidDimensions, "orthonormal ensemble needs m == n");
      return generate_tight_frame_matrix(m, n, 0.0, seed);
  }
  throw Error(ErrorCode::InvalidDimensions, "unknown ensemble");
}

namespace {

OmpThreshold threshold_kind(NoiseModel model) {
  return model == NoiseModel::L2Ball ? OmpThreshold::L2Proposed : OmpThreshold::LinfProposed;
}

}  // namespace

SweepSummary run_recovery_sweep(const SweepConfig& cfg) {
  if (cfg.k < 1 || cfg.k > cfg.n) throw Error(ErrorCode::InvalidSparsity, "sweep: k must lie in [1, n]");
  if (cfg.m < 1 || cfg.n < 1) throw Error(ErrorCode::InvalidDimensions, "sweep: m and n must be positive");
  const bool noisy = cfg.noise.model != NoiseModel::None;
  if (cfg.algorithm == Algorithm::Sp && cfg.noise.model == NoiseModel::LinfCorrelation) {
    throw Error(ErrorCode::InvalidDimensions, "sweep: SP supports only l2 noise");
  }
  const Index order = cfg.algorithm == Algorithm::Omp ? cfg.k + 1 : 3 * cfg.k;
  if (cfg.certify && order > cfg.m) throw Error(ErrorCode::InvalidSparsity, "sweep: RIC order exceeds m");
  if (cfg.certify && binomial(cfg.n, order) > kEnumerationCap) {
    throw Error(ErrorCode::EnumerationTooLarge, "sweep: C(n, order) exceeds the enumeration cap");
  }

  SweepSummary sum;
  sum.rows.reserve(static_cast<std::size_t>(cfg.trials));
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    SweepRow row;
    row.trial = t;
    row.seed = cfg.seed_base + t;
    row.delta_exact = std::numeric_limits<double>::quiet_NaN();
    const SensingMatrix phi = draw_matrix(cfg.ensemble, cfg.m, cfg.n, cfg.perturbation, derive_seed(row.seed, 1));

    if (cfg.certify) {
      row.delta_exact = exact_ric(phi, order).delta;
      row.certified = cfg.algorithm == Algorithm::Omp ? row.delta_exact < ric_bound(RicBound::Proposed, cfg.k)
                                                      : sp_guarantee(row.delta_exact);
    }

    ValueSpec values = ValueSpec::gaussian();
    if (cfg.algorithm == Algorithm::Omp && noisy) {
      double mu = cfg.min_magnitude;
      if (row.certified) {
        try {
          mu = cfg.threshold_factor *
               omp_threshold(threshold_kind(cfg.noise.model), cfg.k, row.delta_exact, cfg.noise.epsilon);
        } catch (const Error&) {
          row.certified = false;
        }
      }
      values = ValueSpec::uniform_min_magnitude(mu);
    }
    const SparseSignal x = generate_sparse_signal(cfg.n, cfg.k, derive_seed(row.seed, 2), values);
    const Measurement meas = measure(phi, x, cfg.noise, derive_seed(row.seed, 3));

    SolverResult res;
    bool guarantee_held = true;
    if (cfg.algorithm == Algorithm::Omp) {
      OmpConfig oc = OmpConfig::noiseless(cfg.k);
      if (cfg.noise.model == NoiseModel::L2Ball) oc = OmpConfig::l2(cfg.noise.epsilon);
      if (cfg.noise.model == NoiseModel::LinfCorrelation) oc = OmpConfig::linf(cfg.noise.epsilon);
      res = omp(phi, meas.y, oc);
      row.success = res.final_support() == x.support();
      if (cfg.noise.model == NoiseModel::LinfCorrelation) {
        // The correlation rule is only guaranteed not to stop early; after
        // k steps ||Phi^T (I - P_T) w||_inf may still exceed epsilon.
        guarantee_held = res.iterations >= cfg.k &&
                         res.support_trace[static_cast<std::size_t>(cfg.k - 1)] == x.support();
      } else {
        guarantee_held = row.success && (!noisy || res.iterations == cfg.k);
      }
    } else {
      SpConfig sc;
      sc.k = cfg.k;
      res = subspace_pursuit(phi, meas.y, sc).result;
      row.success = res.final_support() == x.support();
      if (!noisy) {
        guarantee_held = row.success;
      } else if (row.certified) {
        const double w = meas.noise ? meas.noise->norm() : 0.0;
        const double err = (x.dense() - res.estimate.dense()).norm();
        guarantee_held = err <= sp_constants(std::max(row.delta_exact, 1e-300)).require_c_k() * w + 1e-10;
      }
    }
    row.iterations = res.iterations;
    row.final_residual = res.residual_norms.back();
    row.recon_error_l2 = (x.dense() - res.estimate.dense()).norm();

    if (row.success) ++sum.successes;
    if (row.certified) {
      ++sum.certified;
      if (!guarantee_held) ++sum.certified_failures;
    }
    sum.rows.push_back(row);
  }
  return sum;
}

void write_sweep_csv(std::ostream& out, const SweepSummary& s) {
  out << "trial,seed,delta_exact,certified,success,iterations,final_residual,recon_error_l2\n";
  for (const SweepRow& r : s.rows) {
    out << r.trial << ',' << r.seed << ',' << format_real(r.delta_exact) << ',' << (r.certified ? 1 : 0) << ','
        << (r.success ? 1 : 0) << ',' << r.iterations << ',' << format_real(r.final_residual) << ','
        << format_real(r.recon_error_l2) << '\n';
  }
}

// ---------------------------------------------------------------------------
// Verification suites

namespace {

class Checks {
 public:
  /// observed <= limit (observed < limit when strict).
  void upper(const std::string& check, std::uint64_t id, double observed, double limit, bool strict = false) {
    add(check, id, observed, limit, limit - observed, strict);
  }
  /// observed >= limit (observed > limit when strict).
  void lower(const std::string& check, std::uint64_t id, double observed, double limit, bool strict = false) {
    add(check, id, observed, limit, observed - limit, strict);
  }
  std::vector<CheckRow> take() { return std::move(rows_); }

 private:
  void add(const std::string& check, std::uint64_t id, double observed, double limit, double margin, bool strict) {
    const bool pass = strict ? margin > 0.0 : margin >= 0.0;
    rows_.push_back({check, id, observed, limit, margin, pass});
  }
  std::vector<CheckRow> rows_;
};

Index between(Rng& rng, Index lo, Index hi) {
  return lo + static_cast<Index>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

/// `count` distinct indices from {0..n-1} not in `taken`.
std::vector<Index> draw_indices(Rng& rng, Index n, Index count, const std::vector<Index>& taken = {}) {
  std::vector<Index> pool;
  for (Index i = 0; i < n; ++i) {
    if (std::find(taken.begin(), taken.end(), i) == taken.end()) pool.push_back(i);
  }
  for (Index i = 0; i < count; ++i) {
    const auto j = i + static_cast<Index>(rng.below(static_cast<std::uint64_t>(pool.size()) - i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(count));
  return pool;
}

Vector gaussian_vector(Rng& rng, Index len) {
  Vector v(len);
  for (Index i = 0; i < len; ++i) v(i) = rng.normal();
  return v;
}

constexpr std::uint64_t kSuiteCases = 200;
constexpr double kTol = 1e-10;

std::vector<CheckRow> suite_angles(std::uint64_t seed) {
  Checks c;
  std::uint64_t id = 0;
  for (Index n : {6, 8, 10, 12, 14}) {
    const SensingMatrix q = generate_tight_frame_matrix(n, n, 0.0, derive_seed(seed, 10 + n));
    c.upper("orthonormal_max_cos", id, verify_near_orthogonality(q, 3, 1000, derive_seed(seed, 40 + n)), 1e-12);
    ++id;
  }
  Rng rng(derive_seed(seed, 1));
  for (std::uint64_t i = 0; i < kSuiteCases; ++i, ++id) {
    const Index m = between(rng, 6, 10);
    const Index n = between(rng, m, 14);
    const Index k = between(rng, 2, 3);
    const SensingMatrix phi = generate_gaussian_matrix(m, n, derive_seed(seed, 1000 + i));
    const double delta = exact_ric(phi, k).delta;
    const double cosine = verify_near_orthogonality(phi, k, 1000, derive_seed(seed, 5000 + i));
    c.upper("max_cos_le_delta", id, cosine, delta + kTol);
    if (delta > 0.0 && delta < 1.0) {
      const double plane = angle_bound(AngleBound::PlaneGeometry, delta);
      c.upper("delta_le_plane_geometry", id, delta, plane);
      c.upper("plane_geometry_le_algebraic", id, plane, angle_bound(AngleBound::Algebraic, delta));
    }
  }
  return c.take();
}

std::vector<CheckRow> suite_lemma_a2(std::uint64_t seed) {
  Checks c;
  Rng rng(derive_seed(seed, 2));
  const double limit = std::numbers::pi / 1e5 + 1e-9;
  for (std::uint64_t i = 0; i < kSuiteCases; ++i) {
    Matrix a(4, 2);
    for (Index j = 0; j < a.size(); ++j) a.data()[j] = rng.normal();
    const ConditionAngleReport r = condition_angle(a);
    c.upper("grid_vs_closed_form", i, std::abs(min_angle_grid(a, 100000) - r.theta), limit);
    c.upper("kappa_vs_cot_half_theta", i, std::abs(r.kappa - 1.0 / std::tan(r.theta / 2.0)) / r.kappa, kTol);
  }
  return c.take();
}

std::vector<CheckRow> suite_lemma_a3(std::uint64_t seed) {
  Checks c;
  Rng rng(derive_seed(seed, 3));
  std::uint64_t accepted = 0;
  for (std::uint64_t i = 0; accepted < kSuiteCases && i < 50 * kSuiteCases; ++i) {
    const Index m = between(rng, 8, 12);
    const Index n = between(rng, m, 14);
    const Index k = between(rng, 1, 3);
    const SensingMatrix phi = generate_gaussian_matrix(m, n, derive_seed(seed, 1000 + i));
    const double delta = exact_ric(phi, k + 1).delta;
    if (!(delta < 1.0)) continue;
    ++accepted;
    const SparseSignal x = generate_sparse_signal(n, k, derive_seed(seed, 5000 + i));
    const Vector image = phi.matrix() * x.dense();
    const double corr = (submatrix(phi, x.support()).transpose() * image).norm();
    c.lower("corr_ge_sqrt_energy", i, corr, std::sqrt(1.0 - delta) * image.norm() - kTol);
    c.lower("corr_ge_signal", i, corr, (1.0 - delta) * x.values().norm() - kTol);
  }
  c.lower("cases_with_delta_below_one", 0, static_cast<double>(accepted), static_cast<double>(kSuiteCases));
  return c.take();
}

std::vector<CheckRow> suite_lemma_a4(std::uint64_t seed) {
  Checks c;
  Rng rng(derive_seed(seed, 4));
  std::uint64_t accepted = 0;
  for (std::uint64_t i = 0; accepted < kSuiteCases && i < 50 * kSuiteCases; ++i) {
    const Index m = between(rng, 8, 12);
    const Index n = between(rng, m, 14);
    const Index k = between(rng, 2, 3);
    const SensingMatrix phi = generate_gaussian_matrix(m, n, derive_seed(seed, 1000 + i));
    const double delta = exact_ric(phi, k).delta;
    if (!(delta < 1.0)) continue;
    ++accepted;
    const Index s_size = between(rng, 1, k - 1);
    const auto s_idx = draw_indices(rng, n, s_size);
    const auto x_idx = draw_indices(rng, n, k - s_size, s_idx);
    const SupportSet s(n, s_idx);
    const SupportSet t(n, x_idx);
    const SparseSignal x(t, gaussian_vector(rng, t.size()));
    const ProjectionEnergy e = projection_energy_split(phi, s, x);
    const double energy = (phi.matrix() * x.dense()).squaredNorm();
    c.upper("cos_energy", i, e.cos_energy, delta * delta * energy + kTol);
    c.lower("sin_energy", i, e.sin_energy, (1.0 - delta * delta) * energy - kTol);
    const FrameBounds fb = empirical_effective_frame(phi, s, k);
    c.lower("effective_lower_frame", i, fb.lower, (1.0 - delta) * (1.0 - delta * delta) - kTol);
  }
  c.lower("cases_with_delta_below_one", 0, static_cast<double>(accepted), static_cast<double>(kSuiteCases));
  return c.take();
}

std::vector<CheckRow> suite_lemma_a5(std::uint64_t seed) {
  Checks c;
  Rng rng(derive_seed(seed, 5));
  for (std::uint64_t i = 0; i < kSuiteCases; ++i) {
    const Index m = between(rng, 8, 12);
    const Index n = between(rng, m, 14);
    const Index k = between(rng, 2, 3);
    const SensingMatrix phi = generate_gaussian_matrix(m, n, derive_seed(seed, 1000 + i));
    const double delta = exact_ric(phi, k).delta;
    const Index a = between(rng, 1, k - 1);
    const auto t1_idx = draw_indices(rng, n, a);
    const auto t2_idx = draw_indices(rng, n, k - a, t1_idx);
    const SupportSet t1(n, t1_idx);
    const SupportSet t2(n, t2_idx);
    const Vector x = gaussian_vector(rng, t2.size());
    const double lhs = (submatrix(phi, t1).transpose() * (submatrix(phi, t2) * x)).norm();
    c.upper("cross_correlation", i, lhs, delta * x.norm() + kTol);
  }
  return c.take();
}

struct SpRegime {
  const char* name;
  Index m;
  Index n;
  Index k;
  double perturbation;
};

std::vector<CheckRow> suite_sp_contraction(std::uint64_t seed) {
  Checks c;
  constexpr std::uint64_t kPerRegime = 150;
  constexpr SpRegime regimes[] = {{"k1_tight_40x41", 40, 41, 1, 0.0}, {"k2_perturbed_12x12", 12, 12, 2, 0.1}};
  std::uint64_t id = 0;
  std::uint64_t stream = 0;
  for (const SpRegime& reg : regimes) {
    std::uint64_t noiseless_done = 0;
    std::uint64_t noisy_done = 0;
    std::uint64_t drawn = 0;
    const std::string tag = reg.name;
    while ((noiseless_done < kPerRegime || noisy_done < kPerRegime) && drawn < 40 * kPerRegime) {
      const std::uint64_t s = derive_seed(seed, 100000 + stream++);
      ++drawn;
      const SensingMatrix phi = generate_tight_frame_matrix(reg.m, reg.n, reg.perturbation, derive_seed(s, 1));
      const auto delta = exact_ric_if_below(phi, 3 * reg.k, kSpDeltaBound, true);
      if (!delta) continue;
      const SpConstants k_consts = sp_constants(std::max(*delta, 1e-12));
      const SparseSignal x = generate_sparse_signal(reg.n, reg.k, derive_seed(s, 2));
      SpConfig cfg;
      cfg.k = reg.k;

      if (noiseless_done < kPerRegime) {
        const Measurement meas = measure(phi, x);
        const SpRun run = subspace_pursuit(phi, meas.y, cfg, x);
        const auto& r = run.trace.residual_norms;
        const double zero = cfg.zero_residual_tol * r.front();
        double worst_step = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 1; j < r.size(); ++j) {
          if (r[j - 1] > zero) worst_step = std::max(worst_step, r[j] - r[j - 1]);
        }
        c.upper(tag + ":residual_strict_decrease", id, worst_step, 0.0, true);
        const auto& me = run.trace.missed_energy;
        double worst_contraction = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 1; j < me.size(); ++j) {
          worst_contraction = std::max(worst_contraction, me[j] - k_consts.alpha * me[j - 1]);
        }
        c.upper(tag + ":missed_energy_contraction", id, worst_contraction, kTol);
        c.upper(tag + ":exact_recovery", id, (x.dense() - run.result.estimate.dense()).norm(),
                1e-9 * x.values().norm());
        ++noiseless_done;
      } else {
        const Measurement meas = measure(phi, x, NoiseSpec::l2_ball(0.01), derive_seed(s, 3));
        const double w = meas.noise->norm();
        const SpRun run = subspace_pursuit(phi, meas.y, cfg, x);
        c.upper(tag + ":stable_recovery", id, (x.dense() - run.result.estimate.dense()).norm(),
                k_consts.require_c_k() * w + kTol);
        c.upper(tag + ":terminal_missed_energy", id, run.trace.missed_energy.back(),
                k_consts.terminal_missed_energy_factor() * w + kTol);
        ++noisy_done;
      }
      ++id;
    }
    const double accepted = static_cast<double>(noiseless_done + noisy_done);
    c.lower(tag + ":certified_trials", id++, accepted, static_cast<double>(2 * kPerRegime));
    c.lower(tag + ":filter_acceptance_rate", id++, accepted / static_cast<double>(drawn), 0.0, true);
  }
  return c.take();
}

std::vector<CheckRow> suite_thresholds(std::uint64_t /*seed*/) {
  Checks c;
  std::uint64_t id = 0;
  for (Index k = 1; k <= 20; ++k) {
    for (double eps : {1e-3, 0.1, 1.0, 10.0}) {
      double worst_l2 = -std::numeric_limits<double>::infinity();
      double worst_linf = worst_l2;
      for (int i = 1; i < 200; ++i) {
        const double d = 0.005 * i;
        if (!(1.0 - d - std::sqrt(static_cast<double>(k)) * d > 0.0)) continue;
        worst_l2 = std::max(worst_l2, omp_threshold(OmpThreshold::L2Proposed, k, d, eps) /
                                          omp_threshold(OmpThreshold::L2Prior, k, d, eps));
        worst_linf = std::max(worst_linf, omp_threshold(OmpThreshold::LinfProposed, k, d, eps) /
                                              omp_threshold(OmpThreshold::LinfPrior, k, d, eps));
      }
      c.upper("l2_proposed_over_prior_k" + std::to_string(k), id++, worst_l2, 1.0, true);
      c.upper("linf_proposed_over_prior_k" + std::to_string(k), id++, worst_linf, 1.0, true);
    }
  }
  return c.take();
}

std::vector<CheckRow> suite_sp_constants(std::uint64_t /*seed*/) {
  Checks c;
  std::uint64_t id = 0;
  c.lower("margin_at_0.2412", id++, sp_margin(0.2412), 0.0, true);
  c.upper("margin_at_0.25", id++, sp_margin(0.25), 0.0, true);
  const double root = sp_margin_root();
  c.lower("root_above_0.2412", id++, root, 0.2412, true);
  c.upper("root_below_0.25", id++, root, 0.25, true);
  for (int i = 1; i <= 138; ++i) {
    const double d = 0.001 * i;
    const SpConstants k = sp_constants(d);
    c.upper("c_k_lt_c_bar_k_sqrt", id, k.require_c_k(), k.c_bar_k * std::sqrt(1.0 + d), true);
    c.upper("c_k_lt_c_prime_k", id, k.require_c_k(), k.c_prime_k, true);
    ++id;
  }
  return c.take();
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"angles",   "lemma_a2",       "lemma_a3",   "lemma_a4",
                                                 "lemma_a5", "sp_contraction", "thresholds", "sp_constants"};
  return names;
}

std::vector<CheckRow> run_verify_suite(const std::string& suite, std::uint64_t seed) {
  if (suite == "angles") return suite_angles(seed);
  if (suite == "lemma_a2") return suite_lemma_a2(seed);
  if (suite == "lemma_a3") return suite_lemma_a3(seed);
  if (suite == "lemma_a4") return suite_lemma_a4(seed);
  if (suite == "lemma_a5") return suite_lemma_a5(seed);
  if (suite == "sp_contraction") return suite_sp_contraction(seed);
  if (suite == "thresholds") return suite_thresholds(seed);
  if (suite == "sp_constants") return suite_sp_constants(seed);
  throw Error(ErrorCode::InvalidDimensions, "unknown verification suite '" + suite + "'");
}

void write_checks_csv(std::ostream& out, const std::string& suite, const std::vector<CheckRow>& rows) {
  out << "suite,check,case,observed,limit,margin,pass\n";
  for (const CheckRow& r : rows) {
    out << suite << ',' << r.check << ',' << r.case_id << ',' << format_real(r.observed) << ','
        << format_real(r.limit) << ',' << format_real(r.margin) << ',' << (r.pass ? 1 : 0) << '\n';
  }
}

}  // namespace sparsecert
