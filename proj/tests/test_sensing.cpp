#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "fixtures.hpp"
#include "sparsecert/sensing.hpp"

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

TEST(SupportSetTest, SortsAndValidates) {
  const SupportSet s(6, {4, 1, 3});
  EXPECT_EQ(s.indices(), (std::vector<Index>{1, 3, 4}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(code_of([] { SupportSet(3, {0, 3}); }), ErrorCode::InvalidSupport);
  EXPECT_EQ(code_of([] { SupportSet(3, {1, 1}); }), ErrorCode::InvalidSupport);
  EXPECT_EQ(code_of([] { SupportSet(3, {-1}); }), ErrorCode::InvalidSupport);
}

TEST(SupportSetTest, SetAlgebra) {
  const SupportSet a(6, {0, 2, 4});
  const SupportSet b(6, {1, 2});
  EXPECT_EQ(a.unite(b), SupportSet(6, {0, 1, 2, 4}));
  EXPECT_EQ(a.minus(b), SupportSet(6, {0, 4}));
  EXPECT_FALSE(a.disjoint(b));
  EXPECT_TRUE(a.disjoint(SupportSet(6, {1, 3})));
  EXPECT_EQ(SupportSet::all(3), SupportSet(3, {0, 1, 2}));
  EXPECT_TRUE(SupportSet::empty(3).is_empty());
  EXPECT_EQ(code_of([&] { a.unite(SupportSet(5, {})); }), ErrorCode::InvalidSupport);
}

TEST(RestrictEmbed, RoundTrip) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Vector u(9);
    for (Index i = 0; i < 9; ++i) u(i) = rng.normal();
    const SupportSet s(9, {0, 4, 5, 8});
    const Vector back = embed(restrict_to(u, s), s);
    for (Index i = 0; i < 9; ++i) EXPECT_EQ(back(i), s.contains(i) ? u(i) : 0.0);
  }
}

TEST(SparseSignalTest, Invariants) {
  EXPECT_EQ(code_of([] { SparseSignal(SupportSet(4, {1}), Vector::Zero(1)); }), ErrorCode::InvalidSupport);
  EXPECT_EQ(code_of([] { SparseSignal(SupportSet(4, {1, 2}), Vector::Ones(1)); }), ErrorCode::InvalidDimensions);
  const SparseSignal x(SupportSet(5, {1, 3}), (Vector(2) << -2.0, 0.5).finished());
  EXPECT_EQ(x.dense(), (Vector(5) << 0, -2.0, 0, 0.5, 0).finished());
  EXPECT_EQ(x.min_magnitude(), 0.5);
  const SparseSignal y = SparseSignal::from_dense(x.dense());
  EXPECT_EQ(y.support(), x.support());
  EXPECT_EQ(y.values(), x.values());
}

TEST(SensingMatrixTest, NormalizesColumns) {
  Matrix a(2, 2);
  a << 3, 0, 4, 2;
  const SensingMatrix phi(a);
  EXPECT_NEAR(phi.matrix()(0, 0), 0.6, 1e-15);
  EXPECT_NEAR(phi.matrix()(1, 0), 0.8, 1e-15);
  EXPECT_NEAR(phi.matrix()(1, 1), 1.0, 1e-15);
  EXPECT_EQ(code_of([] { SensingMatrix(Matrix::Zero(2, 2)); }), ErrorCode::DegenerateColumn);
}

TEST(GaussianMatrix, DeterministicUnitColumns) {
  const SensingMatrix a = generate_gaussian_matrix(6, 9, 42);
  const SensingMatrix b = generate_gaussian_matrix(6, 9, 42);
  EXPECT_EQ(a.matrix(), b.matrix());
  for (Index j = 0; j < 9; ++j) EXPECT_NEAR(a.column(j).norm(), 1.0, 1e-12);
  EXPECT_NE(generate_gaussian_matrix(6, 9, 1).matrix(), generate_gaussian_matrix(6, 9, 2).matrix());
  EXPECT_EQ(code_of([] { generate_gaussian_matrix(5, 4, 0); }), ErrorCode::InvalidDimensions);
  EXPECT_NO_THROW(generate_gaussian_matrix(4, 4, 0));
}

TEST(TightFrameMatrix, OrthonormalWhenSquare) {
  const SensingMatrix q = generate_tight_frame_matrix(7, 7, 0.0, 5);
  EXPECT_LE((q.matrix().transpose() * q.matrix() - Matrix::Identity(7, 7)).norm(), 1e-12);
  const SensingMatrix f = generate_tight_frame_matrix(5, 8, 0.0, 5);
  for (Index j = 0; j < 8; ++j) EXPECT_NEAR(f.column(j).norm(), 1.0, 1e-12);
  EXPECT_EQ(f.matrix(), generate_tight_frame_matrix(5, 8, 0.0, 5).matrix());
}

TEST(SparseSignalGenerator, WorkedExamples) {
  EXPECT_EQ(generate_sparse_signal(5, 5, 9).support(), SupportSet::all(5));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SparseSignal x = generate_sparse_signal(20, 4, seed, ValueSpec::uniform_min_magnitude(2.0));
    EXPECT_EQ(x.sparsity(), 4);
    EXPECT_GE(x.min_magnitude(), 2.0);
    EXPECT_LE(x.values().cwiseAbs().maxCoeff(), 4.0);
  }
  const SparseSignal a = generate_sparse_signal(12, 3, 77, ValueSpec::rademacher());
  const SparseSignal b = generate_sparse_signal(12, 3, 77, ValueSpec::rademacher());
  EXPECT_EQ(a.support(), b.support());
  EXPECT_EQ(a.values(), b.values());
  for (Index i = 0; i < a.sparsity(); ++i) EXPECT_EQ(std::abs(a.values()(i)), 1.0);
  EXPECT_EQ(code_of([] { generate_sparse_signal(3, 4, 0); }), ErrorCode::InvalidDimensions);
}

TEST(Measure, NoiselessAndCanonical) {
  const SensingMatrix phi = testing::canonical_2x3();
  const Measurement m = measure(phi, testing::unit_at(3, 2));
  EXPECT_FALSE(m.noise.has_value());
  EXPECT_NEAR(m.y(0), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(m.y(1), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(code_of([&] { measure(phi, testing::unit_at(4, 0)); }), ErrorCode::InvalidDimensions);
}

TEST(Measure, LinearWithoutNoise) {
  const SensingMatrix phi = generate_gaussian_matrix(6, 10, 1);
  const SparseSignal x = generate_sparse_signal(10, 3, 2);
  const SparseSignal x3(x.support(), 3.0 * x.values());
  const Vector lhs = measure(phi, x3).y;
  const Vector rhs = 3.0 * measure(phi, x).y;
  EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Measure, NoiseModelsRespectBudgets) {
  const SensingMatrix phi = generate_gaussian_matrix(8, 12, 4);
  const SparseSignal x = generate_sparse_signal(12, 2, 5);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Measurement l2 = measure(phi, x, NoiseSpec::l2_ball(0.1), seed);
    ASSERT_TRUE(l2.noise.has_value());
    EXPECT_LE(l2.noise->norm(), 0.1 * (1 + 1e-12));
    EXPECT_GT(l2.noise->norm(), 0.0);
    EXPECT_LE((l2.y - phi.matrix() * x.dense() - *l2.noise).norm(), 1e-14);

    const Measurement li = measure(phi, x, NoiseSpec::linf_correlation(0.05), seed);
    EXPECT_LE((phi.matrix().transpose() * *li.noise).cwiseAbs().maxCoeff(), 0.05 * (1 + 1e-12));
  }
  EXPECT_EQ(measure(phi, x, NoiseSpec::l2_ball(0.1), 3).y, measure(phi, x, NoiseSpec::l2_ball(0.1), 3).y);
}

TEST(Submatrix, WorkedExamples) {
  const SensingMatrix phi = testing::canonical_2x3();
  EXPECT_EQ(submatrix(phi, SupportSet::all(3)), phi.matrix());
  const Matrix s = submatrix(phi, SupportSet(3, {0, 2}));
  EXPECT_EQ(s.col(0), phi.column(0));
  EXPECT_EQ(s.col(1), phi.column(2));
  EXPECT_EQ(submatrix(Matrix::Identity(3, 3), SupportSet(3, {0})), Matrix::Identity(3, 3).col(0));
  EXPECT_EQ(code_of([&] { submatrix(phi, SupportSet(4, {3})); }), ErrorCode::InvalidSupport);
}

TEST(MatrixCsv, RoundTripIsExact) {
  const Matrix a = generate_gaussian_matrix(4, 6, 8).matrix();
  std::stringstream io;
  write_matrix_csv(io, a);
  EXPECT_EQ(read_matrix_csv(io), a);
  std::istringstream ragged("1,2\n3\n");
  EXPECT_EQ(code_of([&] { read_matrix_csv(ragged); }), ErrorCode::IoError);
}

TEST(GeneratorConfigTest, Validates) {
  GeneratorConfig c;
  c.m = 4;
  c.n = 6;
  c.k = 2;
  EXPECT_NO_THROW(c.validate());
  c.k = 5;
  EXPECT_EQ(code_of([&] { c.validate(); }), ErrorCode::InvalidDimensions);
}

}  // namespace
}  // namespace sparsecert
