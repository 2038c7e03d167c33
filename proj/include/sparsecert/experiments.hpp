#pragma once

// Experiment harness behind the command-line tool: CSV tables for the bound
// and effective-RIC curves, Monte Carlo recovery sweeps with optional exact
// certification, and the numeric verification suites.
//
// Every CSV starts with '#'-prefixed manifest lines. Data rows never contain
// '#', use ',' separators, '.' decimals, LF endings and 17 significant digits.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sparsecert/sensing.hpp"

namespace sparsecert {

struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t seed_base = 0;
  std::string tool_version = SPARSECERT_VERSION;
  /// ISO-8601 UTC; filled by now_utc() unless set explicitly.
  std::string started_at;

  void write(std::ostream& out) const;
};

std::string now_utc();

/// "%.17g", with "nan" / "inf" / "-inf" spelled out.
std::string format_real(double v);

/// splitmix64 finalizer of (seed, stream); used to derive independent
/// sub-seeds (matrix, signal, noise) from a per-trial seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// ---------------------------------------------------------------------------
// Tables

void write_bounds_table(std::ostream& out, Index k_min, Index k_max);
void write_effective_ric_table(std::ostream& out, double delta_min, double delta_max, double step);

/// "delta,alpha,beta,margin,c_k,c_prime_k,c_bar_k" over a delta grid; c_k is nan past the margin root.
void write_sp_constants_table(std::ostream& out, double delta_min, double delta_max, double step);

// ---------------------------------------------------------------------------
// Recovery sweeps

enum class Algorithm { Omp, Sp };
enum class Ensemble { Gaussian, TightFrame, Orthonormal };

struct SweepConfig {
  Algorithm algorithm = Algorithm::Omp;
  Ensemble ensemble = Ensemble::Gaussian;
  double perturbation = 0.0;
  Index m = 20;
  Index n = 24;
  Index k = 2;
  std::uint64_t trials = 100;
  std::uint64_t seed_base = 0;
  bool certify = false;
  NoiseSpec noise;
  /// Noisy OMP sweeps: signal magnitudes start at threshold_factor times the
  /// guarantee threshold on certified trials.
  double threshold_factor = 1.05;
  /// Magnitude floor used when no threshold applies.
  double min_magnitude = 1.0;
};

struct SweepRow {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  double delta_exact = 0.0;  // NaN when not certified
  bool certified = false;
  bool success = false;
  Index iterations = 0;
  double final_residual = 0.0;
  double recon_error_l2 = 0.0;
};

struct SweepSummary {
  std::vector<SweepRow> rows;
  std::uint64_t certified = 0;
  std::uint64_t certified_failures = 0;
  std::uint64_t successes = 0;
};

/// Runs the trials in order with per-trial seed = seed_base + trial.
/// success = recovered support equals the true support. A certified trial
/// counts as a guarantee failure when:
///   noiseless OMP / SP   success = 0
///   OMP, l2 noise        success = 0 or OMP did not halt after exactly k iterations
///   OMP, linf noise      the first k selections differ from T or OMP halted before k
///   SP, l2 noise         ||x - x_hat|| > c_k ||w|| + 1e-10
SweepSummary run_recovery_sweep(const SweepConfig& cfg);

SensingMatrix draw_matrix(Ensemble e, Index m, Index n, double perturbation, std::uint64_t seed);

void write_sweep_csv(std::ostream& out, const SweepSummary& s);

// ---------------------------------------------------------------------------
// Verification suites

struct CheckRow {
  std::string check;
  std::uint64_t case_id = 0;
  double observed = 0.0;
  double limit = 0.0;
  /// Signed slack; >= 0 means the check passed.
  double margin = 0.0;
  bool pass = false;
};

/// angles, lemma_a2, lemma_a3, lemma_a4, lemma_a5, sp_contraction,
/// thresholds, sp_constants.
const std::vector<std::string>& verify_suite_names();

/// Throws InvalidDimensions for an unknown suite name.
std::vector<CheckRow> run_verify_suite(const std::string& suite, std::uint64_t seed);

void write_checks_csv(std::ostream& out, const std::string& suite, const std::vector<CheckRow>& rows);

}  // namespace sparsecert
