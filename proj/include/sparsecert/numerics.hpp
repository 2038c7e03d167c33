#pragma once

// Dense linear-algebra kernel shared by the solvers and the certification code.
// Everything is 64-bit and sized for desk-scale problems (a few hundred
// rows/columns at most).

#include <Eigen/Dense>

#include "sparsecert/error.hpp"

namespace sparsecert {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Relative threshold on σ_min/σ_max below which a matrix is treated as
/// rank deficient.
inline constexpr double kRankTol = 1e-10;

/// Throws Error(NonFinite) if any entry is NaN or infinite.
void require_finite(const Matrix& a, const char* what);
void require_finite(const Vector& v, const char* what);

Vector matvec(const Matrix& a, const Vector& x);

/// argmin_x ||A x - b||_2 for a tall matrix of full column rank.
///
/// Solved through a Householder QR of A; the rank test uses the singular
/// values of the triangular factor, which equal those of A.
Vector least_squares(const Matrix& a, const Vector& b, double rank_tol = kRankTol);

/// Singular values in descending order; min(rows, cols) of them.
Vector singular_values(const Matrix& a);

/// P = A (A^T A)^{-1} A^T, built as Q Q^T from a thin QR factor.
/// A matrix with zero columns yields the zero projector.
Matrix orthogonal_projector(const Matrix& a, double rank_tol = kRankTol);

/// Angle in [0, pi] between two nonzero vectors. The cosine is clamped to
/// [-1, 1] before acos.
double angle_between(const Vector& u, const Vector& v);

/// |cos| of the angle between two nonzero vectors.
double abs_cosine(const Vector& u, const Vector& v);

}  // namespace sparsecert
