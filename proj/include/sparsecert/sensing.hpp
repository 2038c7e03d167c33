#pragma once

// Sensing-model domain types (supports, sparse signals, unit-column sensing
// matrices, noisy measurements) and their seeded generators.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <vector>

#include "sparsecert/numerics.hpp"

namespace sparsecert {

using Index = Eigen::Index;

/// Deterministic random source. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; uniform and normal variates are derived
/// here (53-bit mantissa fill and the Marsaglia polar method) instead of
/// through <random> distributions, whose algorithms vary between standard
/// libraries. A seed therefore reproduces a run on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on (0, 1].
  double uniform();
  /// Standard normal.
  double normal();
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// Strictly increasing list of column indices in [0, n).
class SupportSet {
 public:
  SupportSet() = default;
  /// Sorts and validates; duplicates or out-of-range entries throw InvalidSupport.
  SupportSet(Index n, std::vector<Index> indices);

  static SupportSet all(Index n);
  static SupportSet empty(Index n) { return SupportSet(n, {}); }

  Index ambient() const { return n_; }
  Index size() const { return static_cast<Index>(indices_.size()); }
  bool is_empty() const { return indices_.empty(); }
  const std::vector<Index>& indices() const { return indices_; }
  Index operator[](Index i) const { return indices_[static_cast<std::size_t>(i)]; }
  bool contains(Index i) const;

  SupportSet unite(const SupportSet& other) const;
  SupportSet minus(const SupportSet& other) const;
  bool disjoint(const SupportSet& other) const;

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  Index n_ = 0;
  std::vector<Index> indices_;
};

/// u_S: entries of a length-n vector indexed by S.
Vector restrict_to(const Vector& u, const SupportSet& s);
/// Zero-padded embedding of |S| values into length n.
Vector embed(const Vector& values, const SupportSet& s);

/// Sparse vector with an explicit support; stored values are all nonzero.
class SparseSignal {
 public:
  SparseSignal() = default;
  SparseSignal(SupportSet support, Vector values);

  /// Keeps the exactly-nonzero entries of a dense vector.
  static SparseSignal from_dense(const Vector& dense);

  Index ambient() const { return support_.ambient(); }
  Index sparsity() const { return support_.size(); }
  const SupportSet& support() const { return support_; }
  const Vector& values() const { return values_; }
  Vector dense() const { return embed(values_, support_); }
  double min_magnitude() const;

 private:
  SupportSet support_;
  Vector values_;
};

/// M x N matrix whose columns have unit l2 norm; normalization happens at
/// construction so the invariant always holds.
class SensingMatrix {
 public:
  SensingMatrix() = default;
  /// Throws DegenerateColumn if a column is (numerically) zero.
  explicit SensingMatrix(Matrix raw);

  Index m() const { return matrix_.rows(); }
  Index n() const { return matrix_.cols(); }
  const Matrix& matrix() const { return matrix_; }
  auto column(Index i) const { return matrix_.col(i); }

 private:
  Matrix matrix_;
};

enum class NoiseModel { None, L2Ball, LinfCorrelation };

struct NoiseSpec {
  NoiseModel model = NoiseModel::None;
  double epsilon = 0.0;

  static NoiseSpec none() { return {}; }
  static NoiseSpec l2_ball(double eps) { return {NoiseModel::L2Ball, eps}; }
  static NoiseSpec linf_correlation(double eps) { return {NoiseModel::LinfCorrelation, eps}; }
};

struct Measurement {
  Vector y;
  std::optional<Vector> noise;
  NoiseSpec noise_spec;
};

enum class ValueDistribution { Gaussian, Rademacher, UniformMinMagnitude };

struct ValueSpec {
  ValueDistribution kind = ValueDistribution::Gaussian;
  /// Only used by UniformMinMagnitude: |value| is uniform on [mu, 2 mu].
  double min_magnitude = 1.0;

  static ValueSpec gaussian() { return {}; }
  static ValueSpec rademacher() { return {ValueDistribution::Rademacher, 1.0}; }
  static ValueSpec uniform_min_magnitude(double mu) { return {ValueDistribution::UniformMinMagnitude, mu}; }
};

struct GeneratorConfig {
  std::uint64_t seed = 0;
  Index m = 1;
  Index n = 1;
  Index k = 1;
  ValueSpec values;

  /// Throws InvalidDimensions unless 1 <= k <= m <= n.
  void validate() const;
};

/// I.i.d. N(0,1) entries, then unit-norm columns. Requires 1 <= m <= n.
SensingMatrix generate_gaussian_matrix(Index m, Index n, std::uint64_t seed);

/// First m rows of a Haar-distributed n x n orthogonal matrix (a random
/// unit-norm tight frame), plus `perturbation` * N(0, 1/m) entries, then unit
/// columns. With m == n and zero perturbation the result is orthonormal.
SensingMatrix generate_tight_frame_matrix(Index m, Index n, double perturbation, std::uint64_t seed);

/// Support uniform without replacement, values per `values`. Zero draws are redrawn.
SparseSignal generate_sparse_signal(Index n, Index k, std::uint64_t seed, ValueSpec values = {});

/// y = Phi x + w with w drawn per `noise` (see NoiseSpec). `seed` drives the noise only.
Measurement measure(const SensingMatrix& phi, const SparseSignal& x, NoiseSpec noise = {},
                    std::uint64_t seed = 0);

Matrix submatrix(const Matrix& a, const SupportSet& s);
Matrix submatrix(const SensingMatrix& phi, const SupportSet& s);

/// Plain-text CSV, one row per line, 17 significant digits.
void write_matrix_csv(std::ostream& out, const Matrix& a);
Matrix read_matrix_csv(std::istream& in);

}  // namespace sparsecert
