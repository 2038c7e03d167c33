#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "sparsecert/interference.hpp"
#include "sparsecert/omp.hpp"

namespace sparsecert {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::IoError;
}

TEST(InterferenceProjector, CanonicalAndEmpty) {
  const SensingMatrix c = testing::canonical_2x3();
  Matrix expect = Matrix::Zero(2, 2);
  expect(1, 1) = 1.0;
  EXPECT_LE((interference_projector(c, SupportSet(3, {0})) - expect).norm(), 1e-15);
  EXPECT_EQ(interference_projector(c, SupportSet::empty(3)), Matrix::Identity(2, 2));
  EXPECT_LE(interference_projector(c, SupportSet(3, {0, 1})).norm(), 1e-14);
}

TEST(Cancel, RemovesInterferenceAndIsIdempotent) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SensingMatrix g = generate_gaussian_matrix(10, 16, seed);
    const SupportSet t_d(16, {static_cast<Index>(seed % 16), static_cast<Index>((seed + 5) % 16)});
    const SparseSignal xd = SparseSignal(t_d, Vector::Constant(2, 2.5));
    const SparseSignal xs = generate_sparse_signal(16, 3, seed);
    const Vector y = g.matrix() * (xd.dense() + xs.dense());
    const Vector y_bar = cancel(g, t_d, y);
    // Interference disappears; the rest only loses its T_d-span component.
    EXPECT_LE((cancel(g, t_d, g.matrix() * xd.dense())).norm(), 1e-12);
    EXPECT_LE((cancel(g, t_d, y_bar) - y_bar).norm(), 1e-12);
    EXPECT_LE((submatrix(g, t_d).transpose() * y_bar).norm(), 1e-12);
    EXPECT_LE(y_bar.norm(), y.norm() + 1e-12);
    const Matrix q = interference_projector(g, t_d);
    EXPECT_LE((q * q - q).norm(), 1e-12);
    EXPECT_LE((q - q.transpose()).norm(), 1e-14);
  }
  EXPECT_EQ(code_of([] { cancel(testing::canonical_2x3(), SupportSet(3, {0}), Vector::Ones(3)); }),
            ErrorCode::InvalidDimensions);
}

TEST(EffectiveRicEstimate, ReferenceRows) {
  EXPECT_NEAR(effective_ric_estimate(EffectiveRic::Davenport, 0.2), 0.25, 1e-15);
  EXPECT_NEAR(effective_ric_estimate(EffectiveRic::PlaneGeometry, 0.2), 0.7 / 3.0, 1e-15);
  EXPECT_NEAR(effective_ric_estimate(EffectiveRic::Proposed, 0.2), 0.232, 1e-15);
  EXPECT_EQ(effective_ric_estimate(EffectiveRic::Davenport, 0.5), 1.0);
  EXPECT_NEAR(effective_ric_estimate(EffectiveRic::PlaneGeometry, 0.5), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(effective_ric_estimate(EffectiveRic::Proposed, 0.5), 0.625, 1e-15);
  EXPECT_EQ(code_of([] { effective_ric_estimate(EffectiveRic::Proposed, 1.0); }), ErrorCode::InvalidDelta);
  EXPECT_EQ(code_of([] { effective_ric_estimate(EffectiveRic::Davenport, 0.0); }), ErrorCode::InvalidDelta);
}

TEST(EffectiveRicEstimate, OrderingOnGrid) {
  for (int i = 1; i < 1000; ++i) {
    const double d = i / 1000.0;
    const EffectiveRicReport r = effective_ric_report(d);
    EXPECT_LE(r.delta_bar, r.delta_bar_g);
    EXPECT_LE(r.delta_bar_g, r.delta_bar_a);
    EXPECT_GE(r.delta_bar, d);
    if (r.delta_bar_g < 1.0) { EXPECT_LT(r.delta_bar, r.delta_bar_g) << d; }
    if (r.delta_bar_a < 1.0) { EXPECT_LT(r.delta_bar_g, r.delta_bar_a) << d; }
  }
}

TEST(EmpiricalFrame, WorkedExamples) {
  const FrameBounds ortho = empirical_effective_frame(generate_tight_frame_matrix(6, 6, 0.0, 2),
                                                      SupportSet(6, {1}), 3);
  EXPECT_NEAR(ortho.lower, 1.0, 1e-12);
  EXPECT_NEAR(ortho.upper, 1.0, 1e-12);
  EXPECT_EQ(ortho.supports_examined, 10u);

  const FrameBounds c = empirical_effective_frame(testing::canonical_2x3(), SupportSet(3, {0}), 2);
  EXPECT_NEAR(c.lower, 0.5, 1e-14);
  EXPECT_NEAR(c.upper, 1.0, 1e-14);

  EXPECT_EQ(code_of([] { empirical_effective_frame(testing::canonical_2x3(), SupportSet(3, {0}), 1); }),
            ErrorCode::InvalidSparsity);
  EXPECT_EQ(code_of([] { empirical_effective_frame(generate_gaussian_matrix(30, 60, 1), SupportSet(60, {0}), 20); }),
            ErrorCode::EnumerationTooLarge);
}

TEST(EmpiricalFrame, WithinAnalyticFrame) {
  int tested = 0;
  for (std::uint64_t seed = 0; seed < 200 && tested < 60; ++seed) {
    const SensingMatrix g = generate_tight_frame_matrix(10, 14, 0.0, seed);
    const double d = exact_ric(g, 3).delta;
    if (!(d < 1.0)) continue;
    ++tested;
    const FrameBounds fb = empirical_effective_frame(g, SupportSet(14, {static_cast<Index>(seed % 14)}), 3);
    EXPECT_GE(fb.lower, (1.0 - d) * (1.0 - d * d) - 1e-10) << seed;
    EXPECT_GE(fb.lower, 1.0 - effective_ric_estimate(EffectiveRic::Proposed, d) - 1e-10) << seed;
    EXPECT_LE(fb.upper, 1.0 + d + 1e-10) << seed;
  }
  EXPECT_GE(tested, 30);
}

TEST(ProjectionEnergy, SplitsNorm) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SensingMatrix g = generate_gaussian_matrix(9, 12, seed);
    const SupportSet s(12, {0, 1});
    const SparseSignal x(SupportSet(12, {4, 7, 9}), (Vector(3) << 1.0, -0.5, 2.0).finished());
    const ProjectionEnergy e = projection_energy_split(g, s, x);
    const double total = (g.matrix() * x.dense()).squaredNorm();
    EXPECT_NEAR(e.cos_energy + e.sin_energy, total, 1e-12 * total);
    EXPECT_GE(e.cos_energy, 0.0);
  }
  EXPECT_EQ(code_of([] {
              projection_energy_split(testing::canonical_2x3(), SupportSet(3, {2}), testing::unit_at(3, 2));
            }),
            ErrorCode::InvalidSupport);
}

TEST(RecoverAfterCancellation, EmptyInterferenceMatchesPlainSolver) {
  const SensingMatrix g = generate_gaussian_matrix(12, 20, 3);
  const SparseSignal x = generate_sparse_signal(20, 2, 3);
  const Vector y = measure(g, x).y;
  const SolverResult a = recover_after_cancellation(g, SupportSet::empty(20), y, RecoveryMethod::Omp, 2);
  const SolverResult b = omp(g, y, OmpConfig::noiseless(2));
  EXPECT_EQ(a.final_support(), b.final_support());
  EXPECT_EQ(a.estimate.dense(), b.estimate.dense());
}

TEST(RecoverAfterCancellation, OrthonormalRecoversResidualSignal) {
  const SensingMatrix q = generate_tight_frame_matrix(10, 10, 0.0, 8);
  const SupportSet t_d(10, {0, 5});
  const SparseSignal xs(SupportSet(10, {2, 7}), (Vector(2) << 1.5, -0.75).finished());
  const Vector y = q.matrix() * (xs.dense() + SparseSignal(t_d, Vector::Constant(2, 40.0)).dense());
  for (RecoveryMethod method : {RecoveryMethod::Omp, RecoveryMethod::Sp}) {
    const SolverResult r = recover_after_cancellation(q, t_d, y, method, 2);
    EXPECT_EQ(r.estimate.support(), xs.support());
    EXPECT_LE((r.estimate.dense() - xs.dense()).norm(), 1e-10);
  }
}

TEST(RecoverAfterCancellation, DegenerateProjectedColumn) {
  Matrix a(2, 3);
  a << 1, 1, 0, 0, 0, 1;
  const SensingMatrix dup(a);
  EXPECT_EQ(code_of([&] {
              recover_after_cancellation(dup, SupportSet(3, {0}), Vector::Ones(2), RecoveryMethod::Omp, 1);
            }),
            ErrorCode::DegenerateColumn);
}

}  // namespace
}  // namespace sparsecert
