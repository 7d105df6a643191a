// Copyright 2026 The gksl Authors
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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gksl/matrix_json.hpp"
#include "gksl/opcore.hpp"
#include "test_util.hpp"

namespace gksl {
namespace {

using testing::random_hermitian;
using testing::random_matrix;

TEST(Tensor, IdentityTimesIdentity) {
  EXPECT_TRUE(tensor(pauli::identity(), pauli::identity()).isApprox(CMatrix::Identity(4, 4)));
}

TEST(Tensor, SigmaZOnFirstFactor) {
  const CMatrix m = tensor(pauli::z(), pauli::identity());
  CMatrix expected = CMatrix::Zero(4, 4);
  expected.diagonal() << 1, 1, -1, -1;
  EXPECT_EQ(max_abs(m - expected), 0.0);
}

TEST(Tensor, XXFlipsBothBits) {
  const int zero[] = {0, 0};
  const int one[] = {1, 1};
  const CVector out = tensor(pauli::x(), pauli::x()) * basis_vector(zero);
  EXPECT_LT((out - basis_vector(one)).norm(), 1e-15);
}

TEST(Tensor, MixedProductAndAssociativity) {
  std::mt19937_64 rng(7);
  const CMatrix a = random_matrix(2, rng), b = random_matrix(3, rng);
  const CMatrix c = random_matrix(2, rng), d = random_matrix(3, rng);
  EXPECT_LT(max_abs(tensor(a, b) * tensor(c, d) - tensor(a * c, b * d)), 1e-12);
  const CMatrix e = random_matrix(2, rng);
  EXPECT_LT(max_abs(tensor(tensor(a, b), e) - tensor(a, tensor(b, e))), 1e-12);
}

TEST(Tensor, RespectsDimensionLimit) {
  EXPECT_THROW(tensor(CMatrix::Identity(8, 8), CMatrix::Identity(8, 8), 32), DimensionError);
  EXPECT_NO_THROW(tensor(CMatrix::Identity(8, 8), CMatrix::Identity(4, 4), 32));
}

TEST(PartialTrace, ProductState) {
  std::mt19937_64 rng(3);
  const CMatrix ra = testing::random_density(2, rng).matrix();
  const CMatrix rb = testing::random_density(3, rng).matrix();
  EXPECT_LT(max_abs(partial_trace(tensor(ra, rb), 2, 3, Subsystem::A) - ra), 1e-14);
  EXPECT_LT(max_abs(partial_trace(tensor(ra, rb), 2, 3, Subsystem::B) - rb), 1e-14);
}

TEST(PartialTrace, BellStateIsMaximallyMixed) {
  CVector phi = CVector::Zero(4);
  phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
  const CMatrix reduced = partial_trace(phi * phi.adjoint(), 2, 2, Subsystem::A);
  EXPECT_LT(max_abs(reduced - 0.5 * CMatrix::Identity(2, 2)), 1e-15);
}

TEST(PartialTrace, PreservesTraceAndIsAdjointOfTensoring) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 5; ++rep) {
    const CMatrix m = random_matrix(6, rng);
    const CMatrix a = random_matrix(2, rng);
    const CMatrix kept = partial_trace(m, 2, 3, Subsystem::A);
    EXPECT_NEAR(std::abs(kept.trace() - m.trace()), 0.0, 1e-12);
    const Complex lhs = (tensor(a, CMatrix::Identity(3, 3)) * m).trace();
    EXPECT_NEAR(std::abs(lhs - (a * kept).trace()), 0.0, 1e-12);
  }
}

TEST(PartialTrace, RejectsWrongDims) {
  EXPECT_THROW(partial_trace(CMatrix::Identity(6, 6), 2, 2, Subsystem::A), DimensionError);
}

TEST(MatrixExp, ZeroGivesIdentity) {
  EXPECT_EQ(max_abs(matrix_exp(CMatrix::Zero(3, 3), 2.0) - CMatrix::Identity(3, 3)), 0.0);
}

TEST(MatrixExp, InvolutoryEulerFormula) {
  const double theta = 0.3;
  const CMatrix u = matrix_exp(-kI * theta * pauli::x());
  const CMatrix expected = std::cos(theta) * pauli::identity() - kI * std::sin(theta) * pauli::x();
  EXPECT_LT(max_abs(u - expected), 1e-14);
  EXPECT_NEAR(u(0, 0).real(), 0.95534, 5e-6);
}

TEST(MatrixExp, Diagonal) {
  const CMatrix e = matrix_exp(testing::diag2(-1.0, -2.0), 1.0);
  EXPECT_NEAR(e(0, 0).real(), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(e(1, 1).real(), std::exp(-2.0), 1e-15);
  EXPECT_EQ(std::abs(e(0, 1)), 0.0);
}

TEST(MatrixExp, NonNormalInverseAndPadeAgreement) {
  std::mt19937_64 rng(5);
  for (Index n : {2, 5, 9}) {
    const CMatrix m = random_matrix(n, rng);
    const CMatrix e = matrix_exp(m, 1.3);
    EXPECT_LT(max_abs(e * matrix_exp(m, -1.3) - CMatrix::Identity(n, n)), 1e-9);
    EXPECT_LT(max_abs(e - matrix_exp_pade(1.3 * m)), 1e-10 * max_abs(e));
  }
}

TEST(MatrixExp, NilpotentJordanBlock) {
  CMatrix n = CMatrix::Zero(3, 3);
  n(0, 1) = n(1, 2) = 1.0;
  const CMatrix e = matrix_exp(n, 2.0);
  EXPECT_NEAR(e(0, 2).real(), 2.0, 1e-14);
  EXPECT_NEAR(e(0, 1).real(), 2.0, 1e-14);
}

TEST(MatrixExp, RejectsNonFinite) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = std::nan("");
  EXPECT_THROW(matrix_exp(m), NumericError);
}

TEST(JordanWigner, SingleMode) {
  EXPECT_EQ(max_abs(jordan_wigner_lowering(1, 1) - pauli::lower()), 0.0);
}

TEST(JordanWigner, FermiAlgebraExhaustive) {
  for (int l = 1; l <= 6; ++l) {
    const Index dim = Index{1} << l;
    std::vector<CMatrix> c;
    for (int j = 1; j <= l; ++j) c.push_back(jordan_wigner_lowering(l, j));
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < l; ++j) {
        const CMatrix expected = (i == j ? 1.0 : 0.0) * CMatrix::Identity(dim, dim);
        EXPECT_EQ(max_abs(anticommutator(c[i].adjoint(), c[j]) - expected), 0.0) << l << " " << i << " " << j;
        EXPECT_EQ(max_abs(anticommutator(c[i], c[j])), 0.0);
      }
    }
  }
}

TEST(JordanWigner, RejectsOutOfRange) {
  EXPECT_THROW(jordan_wigner_lowering(3, 0), DimensionError);
  EXPECT_THROW(jordan_wigner_lowering(3, 4), DimensionError);
}

TEST(Hermitian, SymmetrizesWithinToleranceAndRejectsOtherwise) {
  CMatrix m = pauli::x();
  m(0, 1) += 1e-14;
  const HermitianOperator h(m);
  EXPECT_EQ(hermiticity_defect(h.matrix()), 0.0);
  m(0, 1) += 1e-6;
  EXPECT_THROW(HermitianOperator{m}, NumericError);
}

TEST(Density, Invariants) {
  EXPECT_NO_THROW(DensityMatrix::maximally_mixed(3));
  EXPECT_THROW(DensityMatrix(CMatrix::Identity(2, 2)), NumericError);
  EXPECT_THROW(DensityMatrix(testing::diag2(1.5, -0.5)), NumericError);
  EXPECT_EQ(DensityMatrix::basis_state(4, 2).population(2), 1.0);
}

TEST(Eigen, HermitianReconstructionAndResiduals) {
  std::mt19937_64 rng(17);
  for (Index n : {1, 3, 8}) {
    const CMatrix m = random_hermitian(n, rng);
    const HermitianEigen e = eigh(m);
    const double scale = m.norm();
    EXPECT_LT((e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint() - m).norm(),
              1e-9 * scale);
    for (Index k = 1; k < n; ++k) EXPECT_LE(e.values(k - 1), e.values(k));
  }
  const CMatrix g = random_matrix(5, rng);
  const GeneralEigen ge = eig(g);
  for (Index k = 0; k < 5; ++k) {
    EXPECT_LT((g * ge.vectors.col(k) - ge.values(k) * ge.vectors.col(k)).norm(), 1e-9 * g.norm());
  }
}

TEST(Vec, ColumnStackingIdentity) {
  std::mt19937_64 rng(23);
  const CMatrix a = random_matrix(3, rng), x = random_matrix(3, rng), b = random_matrix(3, rng);
  EXPECT_LT((vec(a * x * b) - tensor(b.transpose(), a) * vec(x)).norm(), 1e-12);
  EXPECT_EQ(max_abs(unvec(vec(x), 3) - x), 0.0);
}

TEST(TraceDistance, OrthogonalPureStates) {
  EXPECT_NEAR(trace_distance(DensityMatrix::basis_state(2, 0).matrix(), DensityMatrix::basis_state(2, 1).matrix()),
              1.0, 1e-15);
}

TEST(MatrixJson, RoundTripAndStrictness) {
  std::mt19937_64 rng(29);
  const CMatrix m = random_matrix(3, rng);
  const nlohmann::json j = matrix_to_json(m);
  EXPECT_EQ(max_abs(matrix_from_json(j) - m), 0.0);
  nlohmann::json bad = j;
  bad["re"].erase(0);
  EXPECT_THROW(matrix_from_json(bad), DimensionError);
  nlohmann::json extra = j;
  extra["unexpected"] = 1;
  EXPECT_THROW(matrix_from_json(extra), DimensionError);
  const CMatrix real = matrix_from_json(nlohmann::json{{"dim", 1}, {"re", {2.5}}});
  EXPECT_EQ(real(0, 0), Complex(2.5, 0.0));
}

}  // namespace
}  // namespace gksl
