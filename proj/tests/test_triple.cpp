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

#include "ncqiso/smtriple.hpp"
#include "ncqiso/triple.hpp"

using namespace ncqiso;

namespace {

// J^2 = eps, JD = eps' DJ, J gamma = eps'' gamma J evaluated directly on the matrix part.
KOSigns oracle_signs(const FiniteRealSpectralTriple &t) {
    const CMatrix &j = t.J.matrixPart;
    CMatrix j2 = j * j.conjugate();
    KOSigns s;
    s.eps = j2(0, 0).real() > 0 ? 1 : -1;
    CMatrix jd = j * t.D.conjugate();
    CMatrix dj = t.D * j;
    s.epsPrime = (jd - dj).norm() <= (jd + dj).norm() ? 1 : -1;
    CMatrix g = t.grading();
    CMatrix jg = j * g.conjugate();
    CMatrix gj = g * j;
    s.epsDoublePrime = (jg - gj).norm() <= (jg + gj).norm() ? 1 : -1;
    return s;
}

}  // namespace

TEST(Triple, SmTripleHasDimension96AndKoSix) {
    Rng rng(11);
    YukawaSet p = random_yukawa(rng, 3);
    FiniteRealSpectralTriple F = build_triple(p);
    EXPECT_EQ(F.dimH, 96);
    EXPECT_EQ(F.algebra.size(), 1 + 1 + 4 + 9);
    AxiomReport a = check_axioms(F);
    EXPECT_TRUE(a.pass());
    EXPECT_EQ(a.measured, (KOSigns{1, 1, -1}));
    EXPECT_EQ(oracle_signs(F), (KOSigns{1, 1, -1}));
}

TEST(Triple, GradingSquaresToOneWithBalancedSpectrum) {
    Rng rng(12);
    FiniteRealSpectralTriple F = build_triple(random_yukawa(rng, 3));
    CMatrix g = F.grading();
    EXPECT_LT((g * g - identity(96)).norm(), 1e-14);
    EXPECT_NEAR(g.trace().real(), 0.0, 1e-12);
    EXPECT_LT((g * F.D + F.D * g).norm(), 1e-12);
    EXPECT_LT((F.D - F.D.adjoint()).norm(), 1e-12);
}

TEST(Triple, ToyTriplesSatisfyAxioms) {
    FiniteRealSpectralTriple even = toy_even_triple(1.5);
    EXPECT_TRUE(check_axioms(even).pass());
    EXPECT_EQ(oracle_signs(even), even.signs);
    FiniteRealSpectralTriple odd = toy_odd_triple();
    EXPECT_FALSE(odd.even());
    EXPECT_TRUE(check_axioms(odd).pass());
    FiniteRealSpectralTriple triv = trivial_triple();
    EXPECT_EQ(triv.dimH, 1);
}

TEST(Triple, ProductTripleIsConsistent) {
    Rng rng(13);
    FiniteRealSpectralTriple F = build_triple(random_yukawa(rng, 3));
    FiniteRealSpectralTriple P = product_triple(toy_even_triple(1.0), F);
    EXPECT_EQ(P.dimH, toy_even_triple(1.0).dimH * 96);
    AxiomReport a = check_axioms(P);
    EXPECT_TRUE(a.pass()) << a.max_residual();
    EXPECT_EQ(oracle_signs(P), P.signs);
}

TEST(Triple, EmbeddingUnitsMultiply) {
    Rng rng(14);
    FiniteRealSpectralTriple F = build_triple(random_yukawa(rng, 3));
    const BlockAlgebra &A = F.algebra;
    EXPECT_TRUE(check_embedding(A).pass());
    // e_{12} e_{21} = e_{11} in the M_3 summand.
    CMatrix prod = A.E(3, 0, 1) * A.E(3, 1, 0);
    EXPECT_LT((prod - A.E(3, 0, 0)).norm(), 1e-14);
    EXPECT_LT((A.E(3, 0, 1) * A.E(3, 0, 1)).norm(), 1e-14);
}
