// Copyright 2026 The ncqiso Authors
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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "ncqiso/numlin.hpp"
#include "ncqiso/rng.hpp"

using namespace ncqiso;

TEST(Numlin, KronMatchesEntrywiseDefinition) {
    Rng rng(1);
    CMatrix a = random_gaussian(rng, 2, 3);
    CMatrix b = random_gaussian(rng, 3, 2);
    CMatrix k = kron(a, b);
    ASSERT_EQ(k.rows(), 6);
    ASSERT_EQ(k.cols(), 6);
    for (Index i = 0; i < 2; i++)
        for (Index j = 0; j < 3; j++)
            for (Index p = 0; p < 3; p++)
                for (Index q = 0; q < 2; q++) EXPECT_EQ(k(i * 3 + p, j * 2 + q), a(i, j) * b(p, q));
}

TEST(Numlin, PartialTraceOfProductIsScaledTrace) {
    Rng rng(2);
    CMatrix a = random_gaussian(rng, 3, 3);
    CMatrix b = random_gaussian(rng, 4, 4);
    CMatrix pt = partial_trace_left(kron(a, b), 3, 4);
    EXPECT_LT((pt - a.trace() * b).norm(), 1e-12);
}

TEST(Numlin, HaarUnitaryIsUnitary) {
    Rng rng(3);
    CMatrix u = haar_unitary(rng, 5);
    EXPECT_LT((u * u.adjoint() - CMatrix::Identity(5, 5)).norm(), 1e-13);
    EXPECT_TRUE(is_unitary(u));
    EXPECT_FALSE(is_unitary(2.0 * u));
}

TEST(Numlin, HermitianFunctionMatchesDirectDiagonalization) {
    Rng rng(4);
    // Two decoupled blocks exercise the component split.
    CMatrix a = zeros(7, 7);
    a.block(0, 0, 3, 3) = random_hermitian(rng, 3);
    a.block(3, 3, 4, 4) = random_hermitian(rng, 4);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es{Eigen::MatrixXcd(a)};
    Eigen::MatrixXcd expect = es.eigenvectors() * es.eigenvalues().array().exp().matrix().asDiagonal() *
                              es.eigenvectors().adjoint();
    SpectralFunction sf = hermitian_function(a, [](double x) { return std::exp(x); });
    EXPECT_LT((sf.value - CMatrix(expect)).norm(), 1e-11);
    for (Index i = 0; i < 7; i++) EXPECT_NEAR(sf.spectrum(i), es.eigenvalues()(i), 1e-12);
    EXPECT_EQ(coupled_blocks(a).size(), 2u);
}

TEST(Numlin, NullspaceIsOrthonormalKernel) {
    Rng rng(5);
    CMatrix b = random_gaussian(rng, 3, 6);
    CMatrix n = nullspace(b);
    ASSERT_EQ(n.cols(), 3);
    EXPECT_LT((b * n).norm(), 1e-12);
    EXPECT_LT((n.adjoint() * n - CMatrix::Identity(3, 3)).norm(), 1e-12);
    RMatrix r = RMatrix::Random(2, 5);
    RMatrix nr = nullspace_real(r);
    ASSERT_EQ(nr.cols(), 3);
    EXPECT_LT((r * nr).norm(), 1e-12);
}

TEST(Numlin, BlockTransposeAndBiunitarity) {
    Rng rng(6);
    BlockMatrix b(2, 2, 2, haar_unitary(rng, 4));
    BlockMatrix t = block_transpose(b);
    for (Index i = 0; i < 2; i++)
        for (Index j = 0; j < 2; j++) EXPECT_EQ(CMatrix(t.block(i, j)), CMatrix(b.block(j, i)));
    // Block permutation: both it and its block transpose are unitary.
    BlockMatrix perm(2, 2, 2);
    perm.block(0, 1) = identity(2);
    perm.block(1, 0) = identity(2);
    EXPECT_TRUE(is_biunitary(perm).biunitary());
}

TEST(Numlin, ShapeErrors) {
    EXPECT_THROW(require_shape(zeros(2, 3), 3, 3, "m"), ShapeError);
    CMatrix bad = zeros(2, 2);
    bad(0, 0) = cplx(std::nan(""), 0);
    EXPECT_ANY_THROW(require_finite(bad, "m"));
}

TEST(Rng, DeterministicAndSplittable) {
    Rng a(42), b(42);
    for (int i = 0; i < 10; i++) EXPECT_EQ(a.next_u64(), b.next_u64());
    Rng s1 = Rng(42).split(1), s2 = Rng(42).split(2);
    EXPECT_NE(s1.next_u64(), s2.next_u64());
    Rng c(7);
    for (int i = 0; i < 100; i++) {
        double u = c.uniform();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
        EXPECT_NEAR(std::abs(c.phase()), 1.0, 1e-15);
    }
}
