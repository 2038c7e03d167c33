// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "sparsecert/experiments.hpp"
#include "sparsecert/interference.hpp"
#include "sparsecert/omp.hpp"
#include "sparsecert/ric.hpp"
#include "sparsecert/sp.hpp"

namespace sc = sparsecert;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

struct SuiteTally {
  std::size_t rows = 0;
  std::size_t failed = 0;
  std::string first_failure;
};

SuiteTally tally(const std::vector<sc::CheckRow>& rows) {
  SuiteTally t;
  t.rows = rows.size();
  for (const auto& r : rows) {
    if (!r.pass) {
      if (t.failed++ == 0) t.first_failure = r.check + " case " + std::to_string(r.case_id);
    }
  }
  return t;
}

const sc::CheckRow* find_row(const std::vector<sc::CheckRow>& rows, const std::string& check) {
  for (const auto& r : rows)
    if (r.check == check) return &r;
  return nullptr;
}

Outcome bound_sandwich() {
  Outcome o;
  int failures = 0;
  for (sc::Index k = 1; k <= 10000; ++k) {
    const double lo = sc::ric_bound(sc::RicBound::MoShen, k);
    const double mid = sc::ric_bound(sc::RicBound::Proposed, k);
    const double hi = sc::ric_bound(sc::RicBound::Conjectured, k);
    if (!(lo < mid && mid < hi)) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " k values violate the sandwich");
  return o;
}

Outcome spot_values() {
  Outcome o;
  const double b1 = sc::ric_bound(sc::RicBound::Proposed, 1);
  const double b2 = sc::ric_bound(sc::RicBound::Proposed, 2);
  o.require(std::abs(b1 - (std::sqrt(5.0) - 1.0) / 2.0) <= 1e-12, "bound(1) = " + fmt("%.17g", b1));
  o.require(std::abs(b2 - 0.5) <= 1e-12, "bound(2) = " + fmt("%.17g", b2));
  o.detail = o.pass ? "bound(1)=" + fmt("%.17g", b1) + " bound(2)=" + fmt("%.17g", b2) : o.detail;
  return o;
}

Outcome exact_ric_oracle() {
  Outcome o;
  sc::Matrix a(2, 3);
  const double h = 1.0 / std::sqrt(2.0);
  a << 1.0, 0.0, h, 0.0, 1.0, h;
  const double d2 = sc::exact_ric(sc::SensingMatrix(a), 2).delta;
  o.require(std::abs(d2 - h) <= 1e-10, "canonical delta_2 = " + fmt("%.17g", d2));
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const sc::Index n = 4 + static_cast<sc::Index>(seed);
    const sc::SensingMatrix q = sc::generate_tight_frame_matrix(n, n, 0.0, seed);
    for (sc::Index k = 1; k <= n; ++k) worst = std::max(worst, sc::exact_ric(q, k).delta);
  }
  o.require(worst <= 1e-12, "orthonormal delta_k reached " + fmt("%.3g", worst));
  if (o.pass) o.detail = "delta_2=" + fmt("%.17g", d2) + ", orthonormal max delta_k=" + fmt("%.3g", worst);
  return o;
}

Outcome near_orthogonality() {
  Outcome o;
  const auto rows = sc::run_verify_suite("angles", 2024);
  std::size_t gaussian_cases = 0;
  for (const auto& r : rows)
    if (r.check == "max_cos_le_delta") ++gaussian_cases;
  const SuiteTally t = tally(rows);
  o.require(gaussian_cases >= 200, "only " + std::to_string(gaussian_cases) + " Gaussian matrices");
  o.require(t.failed == 0, std::to_string(t.failed) + " failed checks, first " + t.first_failure);
  if (o.pass) o.detail = std::to_string(gaussian_cases) + " matrices x 1000 pairs, " + std::to_string(t.rows) + " checks";
  return o;
}

Outcome omp_noiseless_guarantee() {
  Outcome o;
  sc::SweepConfig cfg;
  cfg.algorithm = sc::Algorithm::Omp;
  cfg.ensemble = sc::Ensemble::TightFrame;
  cfg.m = 20;
  cfg.n = 24;
  cfg.k = 2;
  cfg.trials = 7000;
  cfg.seed_base = 1;
  cfg.certify = true;
  const sc::SweepSummary s = sc::run_recovery_sweep(cfg);
  o.require(s.certified >= 1000, "only " + std::to_string(s.certified) + " certified trials");
  o.require(s.certified_failures == 0, std::to_string(s.certified_failures) + " certified failures");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(s.certified) + "/" + std::to_string(cfg.trials) +
              " certified (tight frame 20x24, K=2), " + std::to_string(s.certified_failures) + " failures";
  return o;
}

Outcome omp_noisy_guarantees() {
  Outcome o;
  sc::SweepConfig cfg;
  cfg.algorithm = sc::Algorithm::Omp;
  cfg.ensemble = sc::Ensemble::TightFrame;
  cfg.m = 20;
  cfg.n = 24;
  cfg.k = 2;
  cfg.trials = 4500;
  cfg.certify = true;
  std::string summary;
  for (const sc::NoiseSpec& noise : {sc::NoiseSpec::l2_ball(0.01), sc::NoiseSpec::linf_correlation(0.01)}) {
    cfg.noise = noise;
    cfg.seed_base = noise.model == sc::NoiseModel::L2Ball ? 100000 : 200000;
    const sc::SweepSummary s = sc::run_recovery_sweep(cfg);
    const std::string name = noise.model == sc::NoiseModel::L2Ball ? "l2" : "linf";
    o.require(s.certified >= 500, name + ": only " + std::to_string(s.certified) + " certified");
    o.require(s.certified_failures == 0, name + ": " + std::to_string(s.certified_failures) + " failures");
    summary += name + " " + std::to_string(s.certified) + " certified/" + std::to_string(s.certified_failures) +
               " failures; ";
  }
  const SuiteTally t = tally(sc::run_verify_suite("thresholds", 0));
  o.require(t.failed == 0, "threshold dominance failed at " + t.first_failure);
  if (o.pass) o.detail = summary + "threshold dominance " + std::to_string(t.rows) + " grid checks";
  return o;
}

Outcome effective_ric() {
  Outcome o;
  int violations = 0;
  for (int i = 1; i <= 999; ++i) {
    const double d = i / 1000.0;
    const sc::EffectiveRicReport r = sc::effective_ric_report(d);
    if (!(r.delta_bar <= r.delta_bar_g && r.delta_bar_g <= r.delta_bar_a)) ++violations;
    if (r.delta_bar_g < 1.0 && !(r.delta_bar < r.delta_bar_g)) ++violations;
    if (r.delta_bar_a < 1.0 && !(r.delta_bar_g < r.delta_bar_a)) ++violations;
  }
  o.require(violations == 0, std::to_string(violations) + " grid ordering violations");
  const sc::EffectiveRicReport spot = sc::effective_ric_report(0.2);
  o.require(std::abs(spot.delta_bar - 0.232) <= 1e-7 && std::abs(spot.delta_bar_g - 0.2333333) <= 1e-7 &&
                std::abs(spot.delta_bar_a - 0.25) <= 1e-7,
            "spot row at 0.2 off");

  std::uint64_t scenarios = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (std::uint64_t seed = 0; seed < 400 && scenarios < 200; ++seed) {
    const sc::SensingMatrix g = sc::generate_gaussian_matrix(10, 14, seed);
    const sc::Index k = 2 + static_cast<sc::Index>(seed % 2);
    const double d = sc::exact_ric(g, k).delta;
    if (!(d < 1.0)) continue;
    const sc::Index td = 1 + static_cast<sc::Index>((seed / 2) % static_cast<std::uint64_t>(k - 1));
    std::vector<sc::Index> idx;
    for (sc::Index i = 0; i < td; ++i) idx.push_back((static_cast<sc::Index>(seed) + 5 * i) % 14);
    const sc::FrameBounds fb = sc::empirical_effective_frame(g, sc::SupportSet(14, idx), k);
    worst = std::min(worst, fb.lower - ((1.0 - d) * (1.0 - d * d) - 1e-10));
    ++scenarios;
  }
  o.require(worst >= 0.0, "empirical frame below (1-d)(1-d^2) by " + fmt("%.3g", -worst));
  if (o.pass) {
    o.detail = "999 grid points, spot (0.232, 0.2333333, 0.25), " + std::to_string(scenarios) +
               " frame scenarios, min slack " + fmt("%.3g", worst);
  }
  return o;
}

Outcome sp_constant_claims() {
  Outcome o;
  o.require(sc::sp_margin(0.2412) > 0.0, "margin not positive at 0.2412");
  o.require(sc::sp_margin(0.25) < 0.0, "margin not negative at 0.25");
  const double root = sc::sp_margin_root(0.2412, 0.25);
  o.require(root > 0.2412 && root < 0.25, "root " + fmt("%.17g", root) + " outside (0.2412, 0.25)");
  int bar_fail = 0;
  int prime_fail = 0;
  double first_prime = 0.0;
  for (int i = 1; i <= 138; ++i) {
    const double d = i / 1000.0;
    const sc::SpConstants c = sc::sp_constants(d);
    const double ck = c.require_c_k();
    if (!(ck < c.c_bar_k * std::sqrt(1.0 + d))) ++bar_fail;
    if (!(ck < c.c_prime_k)) {
      if (prime_fail++ == 0) first_prime = d;
    }
  }
  o.require(bar_fail == 0, std::to_string(bar_fail) + " grid points with c_k >= c_bar_k sqrt(1+d)");
  o.require(prime_fail == 0, std::to_string(prime_fail) + " of 138 grid points with c_k >= c_prime_k, from delta=" +
                                 fmt("%.3f", first_prime));
  o.detail = "root=" + fmt("%.17g", root) + (o.detail.empty() ? "" : "; ") + o.detail;
  return o;
}

Outcome sp_guarantees() {
  Outcome o;
  const auto rows = sc::run_verify_suite("sp_contraction", 7);
  std::size_t noiseless = 0, noisy = 0;
  for (const auto& r : rows) {
    if (r.check.ends_with(":exact_recovery")) ++noiseless;
    if (r.check.ends_with(":stable_recovery")) ++noisy;
  }
  const SuiteTally t = tally(rows);
  o.require(noiseless >= 300, "only " + std::to_string(noiseless) + " noiseless trials");
  o.require(noisy >= 300, "only " + std::to_string(noisy) + " noisy trials");
  o.require(t.failed == 0, std::to_string(t.failed) + " failed checks, first " + t.first_failure);
  std::string rates;
  for (const char* tag : {"k1_tight_40x41", "k2_perturbed_12x12"}) {
    if (const auto* r = find_row(rows, std::string(tag) + ":filter_acceptance_rate"))
      rates += std::string(" ") + tag + " acceptance " + fmt("%.3f", r->observed);
  }
  if (o.pass) o.detail = std::to_string(noiseless) + " noiseless, " + std::to_string(noisy) + " noisy;" + rates;
  return o;
}

Outcome two_column_angle() {
  Outcome o;
  const auto rows = sc::run_verify_suite("lemma_a2", 5);
  std::size_t grid_cases = 0;
  double worst = 0.0;
  for (const auto& r : rows) {
    if (r.check == "grid_vs_closed_form") {
      ++grid_cases;
      worst = std::max(worst, r.observed);
    }
  }
  const SuiteTally t = tally(rows);
  o.require(grid_cases >= 200, "only " + std::to_string(grid_cases) + " matrices");
  o.require(t.failed == 0, std::to_string(t.failed) + " failed, first " + t.first_failure);
  if (o.pass) o.detail = std::to_string(grid_cases) + " matrices, max gap " + fmt("%.3g", worst) +
                         " (limit " + fmt("%.3g", std::numbers::pi / 1e5 + 1e-9) + ")";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double time_limit_s;
  };
  const std::vector<Criterion> criteria = {
      {"bound sandwich k=1..10000", bound_sandwich, 1.0},
      {"proposed bound spot values", spot_values, 0.0},
      {"exact RIC oracle", exact_ric_oracle, 0.0},
      {"near-orthogonality and angle bound ordering", near_orthogonality, 60.0},
      {"noiseless OMP certified recovery", omp_noiseless_guarantee, 300.0},
      {"noisy OMP certified recovery and thresholds", omp_noisy_guarantees, 0.0},
      {"effective RIC estimates and frame bound", effective_ric, 0.0},
      {"SP constants", sp_constant_claims, 0.0},
      {"SP exact and stable recovery", sp_guarantees, 0.0},
      {"two-column minimum angle", two_column_angle, 0.0},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].time_limit_s > 0.0 && secs >= criteria[i].time_limit_s) {
      o.pass = false;
      o.detail += "; runtime " + fmt("%.2f", secs) + " s over limit " + fmt("%.0f", criteria[i].time_limit_s);
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %zu: %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
