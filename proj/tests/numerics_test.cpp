// Copyright 2026 The cp-phase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cpphase/numerics.hpp"

#include <gtest/gtest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "test_util.hpp"

namespace cpphase {
namespace {

using testing::random_matrix;

TEST(Matexp, zero_is_identity) {
  const ComplexMatrix e = matexp(ComplexMatrix::Zero(2, 2), 1.0);
  EXPECT_EQ(e, ComplexMatrix::Identity(2, 2));
}

TEST(Matexp, diagonal) {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = 2.0;
  const ComplexMatrix e = matexp(a, 1.0);
  EXPECT_NEAR(std::abs(e(0, 0) - std::exp(1.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(e(1, 1) - std::exp(2.0)), 0.0, 1e-13);
  EXPECT_EQ(e(0, 1), Complex(0.0));
}

TEST(Matexp, nilpotent_series_terminates) {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 1) = 1.0;
  ComplexMatrix expected(2, 2);
  expected << 1.0, 1.0, 0.0, 1.0;
  EXPECT_LT((matexp(a, 1.0) - expected).norm(), 1e-15);
}

TEST(Matexp, rejects_non_square) {
  EXPECT_THROW(matexp(ComplexMatrix::Zero(2, 3), 1.0), DimensionError);
}

TEST(Matexp, matches_pade_reference_across_norms) {
  // Eigen's MatrixFunctions module (Pade approximant) is an independent route.
  for (double scale : {0.01, 0.3, 1.0, 5.0, 20.0}) {
    for (int trial = 0; trial < 5; ++trial) {
      const ComplexMatrix a = random_matrix(5, 5, scale / std::sqrt(10.0));
      const ComplexMatrix ours = matexp(a, 1.0);
      const ComplexMatrix ref = a.exp();
      EXPECT_LT((ours - ref).norm() / ref.norm(), 1e-12) << "scale " << scale;
    }
  }
}

TEST(Matexp, large_anti_hermitian_argument_stays_unitary) {
  // ||A t|| of order 100: exp(-i H t) with ||H t||_2 = 100.
  ComplexMatrix h = testing::random_hermitian(4);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
  h /= eig.eigenvalues().cwiseAbs().maxCoeff();
  const ComplexMatrix u = matexp(ComplexMatrix(Complex(0, -1) * h), 100.0);
  EXPECT_LT(unitarity_defect(u), 1e-12);
  const ComplexMatrix ref =
      eig.eigenvectors() *
      (Complex(0, -100.0) * eig.eigenvalues().cast<Complex>() /
       eig.eigenvalues().cwiseAbs().maxCoeff())
          .array()
          .exp()
          .matrix()
          .asDiagonal() *
      eig.eigenvectors().adjoint();
  EXPECT_LT((u - ref).norm() / ref.norm(), 1e-12);
}

TEST(Matexp, semigroup_property) {
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix a = random_matrix(4, 4);
    a *= 2.0 / a.norm();
    const double s = 0.37 * (trial + 1), t = 1.1;
    EXPECT_LT((matexp(a, s) * matexp(a, t) - matexp(a, s + t)).norm(), 1e-10);
  }
}

TEST(Matexp, determinant_is_exp_trace) {
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = random_matrix(3, 3, 0.5);
    const double t = 0.8;
    const Complex det = matexp(a, t).determinant();
    const Complex expected = std::exp(t * a.trace());
    EXPECT_LT(std::abs(det - expected) / std::abs(expected), 1e-10);
  }
}

TEST(Matexp, works_in_long_double) {
  CMatrix<long double> a = CMatrix<long double>::Zero(2, 2);
  a(0, 1) = 1.0L;
  a(1, 0) = -1.0L;
  const CMatrix<long double> e = matexp(a, 0.5L);
  EXPECT_NEAR(static_cast<double>(e(0, 0).real()), std::cos(0.5), 1e-15);
  EXPECT_NEAR(static_cast<double>(e(0, 1).real()), std::sin(0.5), 1e-15);
}

TEST(Kron, identity_product) {
  EXPECT_EQ(kron(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)),
            ComplexMatrix::Identity(4, 4));
}

TEST(Kron, projector_gives_block_diagonal) {
  ComplexMatrix p = ComplexMatrix::Zero(2, 2);
  p(0, 0) = 1.0;
  const ComplexMatrix b = random_matrix(3, 3);
  const ComplexMatrix k = kron(p, b);
  EXPECT_EQ(k.topLeftCorner(3, 3), b);
  EXPECT_EQ(k.bottomRightCorner(3, 3), ComplexMatrix::Zero(3, 3));
  EXPECT_EQ(k.topRightCorner(3, 3), ComplexMatrix::Zero(3, 3));
}

TEST(Kron, mixed_product_rule) {
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = random_matrix(2, 2), b = random_matrix(2, 2);
    const ComplexMatrix c = random_matrix(2, 2), d = random_matrix(2, 2);
    // Oracle: entrywise definition (A C)_{ij} (B D)_{kl} at row 2i+k, column 2j+l.
    const ComplexMatrix ac = a * c, bd = b * d;
    const ComplexMatrix lhs = kron(a, b) * kron(c, d);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l)
            EXPECT_LT(std::abs(lhs(2 * i + k, 2 * j + l) - ac(i, j) * bd(k, l)), 1e-12);
  }
}

TEST(Kron, associative_on_integer_inputs) {
  std::uniform_int_distribution<int> dist(-5, 5);
  auto int_matrix = [&](Index r, Index c) {
    ComplexMatrix m(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) m(i, j) = Complex(dist(testing::rng()), dist(testing::rng()));
    return m;
  };
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix a = int_matrix(2, 3), b = int_matrix(3, 2), c = int_matrix(2, 2);
    EXPECT_EQ(kron(kron(a, b), c), kron(a, kron(b, c)));
  }
}

TEST(CheckDensity, maximally_mixed_qubit_passes) {
  const auto d = check_density(ComplexMatrix(ComplexMatrix::Identity(2, 2) / 2.0));
  EXPECT_TRUE(d.passed);
  EXPECT_NEAR(d.min_eigenvalue, 0.5, 1e-15);
}

TEST(CheckDensity, trace_two_fails) {
  const auto d = check_density(ComplexMatrix(ComplexMatrix::Identity(2, 2)));
  EXPECT_FALSE(d.passed);
  EXPECT_NEAR(d.trace_defect, 1.0, 1e-15);
}

TEST(CheckDensity, negative_eigenvalue_fails) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.5;
  m(1, 1) = -0.5;
  const auto d = check_density(m);
  EXPECT_FALSE(d.passed);
  EXPECT_NEAR(d.min_eigenvalue, -0.5, 1e-15);
  EXPECT_NEAR(d.trace_defect, 0.0, 1e-15);
}

TEST(CheckDensity, non_hermitian_fails) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2) / 2.0;
  m(0, 1) = 0.1;
  const auto d = check_density(m);
  EXPECT_FALSE(d.passed);
  EXPECT_GT(d.hermiticity_defect, 0.1);
}

TEST(DensityMatrix, constructor_validates) {
  EXPECT_THROW(DensityMatrix(ComplexMatrix(ComplexMatrix::Identity(2, 2))), InvalidStateError);
  EXPECT_NO_THROW(DensityMatrix(testing::plus_state()));
  EXPECT_NEAR(DensityMatrix::pure(testing::basis(3, 1)).purity(), 1.0, 1e-15);
}

TEST(TraceOutLast, recovers_factor) {
  const DensityMatrix a = testing::random_density(2);
  const DensityMatrix b = testing::random_density(3);
  const ComplexMatrix joint = kron(a.matrix(), b.matrix());
  EXPECT_LT((trace_out_last(joint, 2, 3) - a.matrix()).norm(), 1e-14);
}

TEST(TraceDistance, orthogonal_pure_states) {
  EXPECT_NEAR(trace_distance(testing::plus_state(), testing::minus_state()), 1.0, 1e-14);
}

}  // namespace
}  // namespace cpphase
