#include "sparsecert/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sparsecert {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDimensions: return "InvalidDimensions";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::InvalidSupport: return "InvalidSupport";
    case ErrorCode::InvalidSparsity: return "InvalidSparsity";
    case ErrorCode::InvalidDelta: return "InvalidDelta";
    case ErrorCode::UnknownBound: return "UnknownBound";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::GuaranteeInapplicable: return "GuaranteeInapplicable";
    case ErrorCode::DegenerateColumn: return "DegenerateColumn";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

void require_finite(const Matrix& a, const char* what) {
  if (!a.allFinite()) throw Error(ErrorCode::NonFinite, std::string(what) + " has non-finite entries");
}

void require_finite(const Vector& v, const char* what) {
  if (!v.allFinite()) throw Error(ErrorCode::NonFinite, std::string(what) + " has non-finite entries");
}

Vector matvec(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) {
    throw Error(ErrorCode::InvalidDimensions,
                "matvec: " + std::to_string(a.cols()) + " columns vs vector of length " +
                    std::to_string(x.size()));
  }
  return a * x;
}

namespace {

// Checks full column rank on the R factor of a thin QR (same singular values as A).
void check_rank(const Matrix& r, double rank_tol, const char* who) {
  Eigen::JacobiSVD<Matrix> svd(r);
  const Vector& s = svd.singularValues();
  if (s.size() == 0) return;
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (!(smax > 0.0) || smin <= rank_tol * smax) {
    throw Error(ErrorCode::RankDeficient,
                std::string(who) + ": sigma_min/sigma_max = " + std::to_string(smax > 0 ? smin / smax : 0.0));
  }
}

}  // namespace

Vector least_squares(const Matrix& a, const Vector& b, double rank_tol) {
  if (a.rows() != b.size()) {
    throw Error(ErrorCode::InvalidDimensions, "least_squares: rhs length does not match rows");
  }
  if (a.cols() == 0) return Vector(0);
  if (a.rows() < a.cols()) {
    throw Error(ErrorCode::InvalidDimensions, "least_squares: more columns than rows");
  }
  require_finite(a, "least_squares matrix");
  require_finite(b, "least_squares rhs");
  Eigen::HouseholderQR<Matrix> qr(a);
  const Matrix r = qr.matrixQR().topRows(a.cols()).triangularView<Eigen::Upper>();
  check_rank(r, rank_tol, "least_squares");
  const Vector qtb = (qr.householderQ().transpose() * b).head(a.cols());
  return r.triangularView<Eigen::Upper>().solve(qtb);
}

Vector singular_values(const Matrix& a) {
  if (a.size() == 0) throw Error(ErrorCode::InvalidDimensions, "singular_values: empty matrix");
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues();
}

Matrix orthogonal_projector(const Matrix& a, double rank_tol) {
  if (a.cols() == 0) return Matrix::Zero(a.rows(), a.rows());
  if (a.rows() < a.cols()) {
    throw Error(ErrorCode::RankDeficient, "orthogonal_projector: more columns than rows");
  }
  Eigen::HouseholderQR<Matrix> qr(a);
  const Matrix r = qr.matrixQR().topRows(a.cols()).triangularView<Eigen::Upper>();
  check_rank(r, rank_tol, "orthogonal_projector");
  const Matrix q = qr.householderQ() * Matrix::Identity(a.rows(), a.cols());
  Matrix p = q * q.transpose();
  // Symmetrize exactly; the product is symmetric only up to rounding.
  return (0.5 * (p + p.transpose())).eval();
}

double abs_cosine(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::InvalidDimensions, "angle: length mismatch");
  const double uu = u.squaredNorm();
  const double vv = v.squaredNorm();
  if (!(uu > 0.0) || !(vv > 0.0)) throw Error(ErrorCode::ZeroVector, "angle: zero-norm input");
  return std::min(1.0, std::abs(u.dot(v)) / std::sqrt(uu * vv));
}

double angle_between(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::InvalidDimensions, "angle: length mismatch");
  const double uu = u.squaredNorm();
  const double vv = v.squaredNorm();
  if (!(uu > 0.0) || !(vv > 0.0)) throw Error(ErrorCode::ZeroVector, "angle: zero-norm input");
  // sqrt(uu * vv) == uu exactly when u == v, so identical inputs give exactly 0.
  const double c = std::clamp(u.dot(v) / std::sqrt(uu * vv), -1.0, 1.0);
  return std::acos(c);
}

}  // namespace sparsecert
