#include "sparsecert/sensing.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace sparsecert {

// ---------------------------------------------------------------------------
// Rng

double Rng::uniform() {
  // 53 random mantissa bits, shifted onto (0, 1].
  return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
}

double Rng::normal() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  return u * f;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return r % bound;
}

// ---------------------------------------------------------------------------
// SupportSet

SupportSet::SupportSet(Index n, std::vector<Index> indices) : n_(n), indices_(std::move(indices)) {
  if (n < 0) throw Error(ErrorCode::InvalidSupport, "negative ambient dimension");
  std::sort(indices_.begin(), indices_.end());
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 0 || indices_[i] >= n) {
      throw Error(ErrorCode::InvalidSupport,
                  "index " + std::to_string(indices_[i]) + " outside [0, " + std::to_string(n) + ")");
    }
    if (i > 0 && indices_[i] == indices_[i - 1]) {
      throw Error(ErrorCode::InvalidSupport, "duplicate index " + std::to_string(indices_[i]));
    }
  }
}

SupportSet SupportSet::all(Index n) {
  std::vector<Index> idx(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  return SupportSet(n, std::move(idx));
}

bool SupportSet::contains(Index i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

SupportSet SupportSet::unite(const SupportSet& other) const {
  if (other.n_ != n_) throw Error(ErrorCode::InvalidSupport, "ambient dimension mismatch");
  std::vector<Index> out;
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                 std::back_inserter(out));
  return SupportSet(n_, std::move(out));
}

SupportSet SupportSet::minus(const SupportSet& other) const {
  if (other.n_ != n_) throw Error(ErrorCode::InvalidSupport, "ambient dimension mismatch");
  std::vector<Index> out;
  std::set_difference(indices_.begin(), indices_.end(), other.indices_.begin(),
                      other.indices_.end(), std::back_inserter(out));
  return SupportSet(n_, std::move(out));
}

bool SupportSet::disjoint(const SupportSet& other) const {
  auto a = indices_.begin();
  auto b = other.indices_.begin();
  while (a != indices_.end() && b != other.indices_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

Vector restrict_to(const Vector& u, const SupportSet& s) {
  if (u.size() != s.ambient()) throw Error(ErrorCode::InvalidDimensions, "restrict: length mismatch");
  Vector out(s.size());
  for (Index i = 0; i < s.size(); ++i) out(i) = u(s[i]);
  return out;
}

Vector embed(const Vector& values, const SupportSet& s) {
  if (values.size() != s.size()) throw Error(ErrorCode::InvalidDimensions, "embed: length mismatch");
  Vector out = Vector::Zero(s.ambient());
  for (Index i = 0; i < s.size(); ++i) out(s[i]) = values(i);
  return out;
}

// ---------------------------------------------------------------------------
// SparseSignal

SparseSignal::SparseSignal(SupportSet support, Vector values)
    : support_(std::move(support)), values_(std::move(values)) {
  if (values_.size() != support_.size()) {
    throw Error(ErrorCode::InvalidDimensions, "signal: value count differs from support size");
  }
  require_finite(values_, "signal values");
  for (Index i = 0; i < values_.size(); ++i) {
    if (values_(i) == 0.0) throw Error(ErrorCode::InvalidSupport, "signal: stored value is zero");
  }
}

SparseSignal SparseSignal::from_dense(const Vector& dense) {
  std::vector<Index> idx;
  for (Index i = 0; i < dense.size(); ++i) {
    if (dense(i) != 0.0) idx.push_back(i);
  }
  SupportSet s(dense.size(), std::move(idx));
  return SparseSignal(s, restrict_to(dense, s));
}

double SparseSignal::min_magnitude() const {
  return values_.size() == 0 ? 0.0 : values_.cwiseAbs().minCoeff();
}

// ---------------------------------------------------------------------------
// SensingMatrix and generators

SensingMatrix::SensingMatrix(Matrix raw) : matrix_(std::move(raw)) {
  require_finite(matrix_, "sensing matrix");
  for (Index j = 0; j < matrix_.cols(); ++j) {
    const double norm = matrix_.col(j).norm();
    if (!(norm > 1e-300)) {
      throw Error(ErrorCode::DegenerateColumn, "column " + std::to_string(j) + " has zero norm");
    }
    matrix_.col(j) /= norm;
  }
}

void GeneratorConfig::validate() const {
  if (k < 1 || k > m || m > n) {
    throw Error(ErrorCode::InvalidDimensions, "generator config requires 1 <= k <= m <= n");
  }
}

namespace {

void check_shape(Index m, Index n) {
  if (m < 1 || m > n) throw Error(ErrorCode::InvalidDimensions, "matrix generator requires 1 <= m <= n");
}

Matrix gaussian_block(Index rows, Index cols, Rng& rng) {
  Matrix a(rows, cols);
  // Column-major fill; part of the reproducibility contract.
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) a(i, j) = rng.normal();
  return a;
}

double draw_value(Rng& rng, const ValueSpec& spec) {
  for (;;) {
    double v = 0.0;
    switch (spec.kind) {
      case ValueDistribution::Gaussian:
        v = rng.normal();
        break;
      case ValueDistribution::Rademacher:
        v = rng.coin() ? 1.0 : -1.0;
        break;
      case ValueDistribution::UniformMinMagnitude: {
        const double mag = spec.min_magnitude * (1.0 + rng.uniform());
        v = rng.coin() ? mag : -mag;
        break;
      }
    }
    if (v != 0.0) return v;
  }
}

}  // namespace

SensingMatrix generate_gaussian_matrix(Index m, Index n, std::uint64_t seed) {
  check_shape(m, n);
  Rng rng(seed);
  return SensingMatrix(gaussian_block(m, n, rng));
}

SensingMatrix generate_tight_frame_matrix(Index m, Index n, double perturbation, std::uint64_t seed) {
  check_shape(m, n);
  if (!(perturbation >= 0.0)) throw Error(ErrorCode::InvalidDimensions, "perturbation must be >= 0");
  Rng rng(seed);
  const Matrix g = gaussian_block(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  // Sign fix on R's diagonal makes Q Haar distributed.
  for (Index j = 0; j < n; ++j) {
    if (qr.matrixQR()(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  Matrix a = q.topRows(m);
  if (perturbation > 0.0) {
    a += (perturbation / std::sqrt(static_cast<double>(m))) * gaussian_block(m, n, rng);
  }
  return SensingMatrix(std::move(a));
}

SparseSignal generate_sparse_signal(Index n, Index k, std::uint64_t seed, ValueSpec values) {
  if (k < 1 || k > n) throw Error(ErrorCode::InvalidDimensions, "sparse signal requires 1 <= k <= n");
  if (values.kind == ValueDistribution::UniformMinMagnitude && !(values.min_magnitude > 0.0)) {
    throw Error(ErrorCode::InvalidDimensions, "min_magnitude must be positive");
  }
  Rng rng(seed);
  // Partial Fisher-Yates over 0..n-1.
  std::vector<Index> pool(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  for (Index i = 0; i < k; ++i) {
    const auto j = static_cast<Index>(i + static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - i))));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(k));
  SupportSet support(n, std::move(pool));
  Vector v(k);
  for (Index i = 0; i < k; ++i) v(i) = draw_value(rng, values);
  return SparseSignal(std::move(support), std::move(v));
}

Measurement measure(const SensingMatrix& phi, const SparseSignal& x, NoiseSpec noise, std::uint64_t seed) {
  if (phi.n() != x.ambient()) throw Error(ErrorCode::InvalidDimensions, "measure: signal length != columns");
  if (!(noise.epsilon >= 0.0)) throw Error(ErrorCode::InvalidDimensions, "noise epsilon must be >= 0");
  Measurement out;
  out.noise_spec = noise;
  out.y = phi.matrix() * x.dense();
  if (noise.model == NoiseModel::None) return out;

  Rng rng(seed);
  Vector w(phi.m());
  for (Index i = 0; i < w.size(); ++i) w(i) = rng.normal();
  const double rho = rng.uniform();
  const double scale = noise.model == NoiseModel::L2Ball
                           ? w.norm()
                           : (phi.matrix().transpose() * w).cwiseAbs().maxCoeff();
  w *= scale > 0.0 ? rho * noise.epsilon / scale : 0.0;
  out.y += w;
  out.noise = std::move(w);
  return out;
}

Matrix submatrix(const Matrix& a, const SupportSet& s) {
  if (s.ambient() != a.cols()) throw Error(ErrorCode::InvalidSupport, "support ambient dimension != columns");
  Matrix out(a.rows(), s.size());
  for (Index j = 0; j < s.size(); ++j) out.col(j) = a.col(s[j]);
  return out;
}

Matrix submatrix(const SensingMatrix& phi, const SupportSet& s) { return submatrix(phi.matrix(), s); }

void write_matrix_csv(std::ostream& out, const Matrix& a) {
  char buf[32];
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", a(i, j));
      if (j) out << ',';
      out << buf;
    }
    out << '\n';
  }
}

Matrix read_matrix_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      double v = 0.0;
      const char* first = cell.data();
      const char* last = first + cell.size();
      while (first != last && *first == ' ') ++first;
      auto [p, ec] = std::from_chars(first, last, v);
      if (ec != std::errc()) throw Error(ErrorCode::IoError, "bad CSV cell '" + cell + "'");
      row.push_back(v);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorCode::IoError, "ragged CSV matrix");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::IoError, "empty CSV matrix");
  Matrix a(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) a(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return a;
}

}  // namespace sparsecert
