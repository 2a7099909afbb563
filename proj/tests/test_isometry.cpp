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

#include "ncqiso/isometry.hpp"
#include "ncqiso/smtriple.hpp"

using namespace ncqiso;

TEST(Isometry, IdentityPointAssemblesIdentity) {
    Corepresentation u = assemble_U(make_identity_point(3));
    EXPECT_EQ(u.U.rows(), 96);
    EXPECT_LT((u.U - identity(96)).norm(), 1e-15);
}

TEST(Isometry, ClassicalPointCommutesWithDirac) {
    Rng rng(41);
    YukawaSet p = random_yukawa(rng, 3);
    FiniteRealSpectralTriple F = build_triple(p);
    Corepresentation u = assemble_U(random_classical_point(rng, 3));
    // Oracle: at d = 1 the conditions are plain matrix identities.
    EXPECT_LT((u.U * u.U.adjoint() - identity(96)).norm(), 1e-12);
    EXPECT_LT((u.U * F.D - F.D * u.U).norm(), 1e-11);
    EXPECT_LT((u.U * F.grading() - F.grading() * u.U).norm(), 1e-12);
    const CMatrix &j = F.J.matrixPart;
    EXPECT_LT((j * u.U.conjugate() - u.U * j).norm(), 1e-12);
    EXPECT_TRUE(verify_corep_conditions(u, F).pass());
}

TEST(Isometry, FreePointPassesInMinimalRegime) {
    Rng rng(42);
    YukawaOptions o;
    o.zeroNu = true;
    YukawaSet p = random_yukawa(rng, 3, o);
    FiniteRealSpectralTriple F = build_triple(p);
    Corepresentation u = assemble_U(make_free_point(rng, 3, 2));
    EXPECT_EQ(u.U.rows(), 192);
    Report r = verify_corep_conditions(u, F);
    EXPECT_TRUE(r.pass()) << r.max_residual();
    EXPECT_TRUE(coaction_formula_check(u, F).pass());
}

TEST(Isometry, CkmViolatingPointFailsConditions) {
    Rng rng(43);
    FiniteRealSpectralTriple F = build_triple(random_yukawa(rng, 3));
    Corepresentation u = assemble_U(make_ckm_violating_point(rng, 3));
    Report r = verify_corep_conditions(u, F);
    EXPECT_FALSE(r.pass());
    EXPECT_THROW(adjoint_coaction_coefficients(u, F), ContainmentError);
}

TEST(Isometry, ComposeMatchesConvolution) {
    Rng rng(44);
    RepresentedGenerators a = random_classical_point(rng, 3);
    RepresentedGenerators b = make_antidiagonal_point(3, haar_unitary(rng, 3), haar_unitary(rng, 3),
                                                      haar_unitary(rng, 2));
    CMatrix c = compose_corepresentations(assemble_U(a).U, 1, assemble_U(b).U, 2);
    EXPECT_LT((c - assemble_U(convolve(a, b)).U).norm(), 1e-12);
}

TEST(Isometry, CommutantContainsClassicalSymmetries) {
    Rng rng(45);
    YukawaSet p = random_yukawa(rng, 3);
    FiniteRealSpectralTriple F = build_triple(p);
    CommutantReport c = classical_commutant_basis(F);
    EXPECT_TRUE(c.residuals.pass());
    EXPECT_GT(c.realDimension, 0);
    EXPECT_EQ(Index(c.basis.size()), c.realDimension);
    EXPECT_LT(commutant_span_residual(c, identity(96)), 1e-10);
    EXPECT_LT(commutant_span_residual(c, assemble_U(random_classical_point(rng, 3)).U), 1e-8);
    EXPECT_GT(commutant_span_residual(c, assemble_U(make_ckm_violating_point(rng, 3)).U), 1e-3);
    // Every basis element solves the defining equations.
    for (size_t k = 0; k < c.basis.size(); k += 37) {
        const CMatrix &x = c.basis[k];
        EXPECT_LT((x * F.D - F.D * x).norm(), 1e-9);
        EXPECT_LT((F.J.matrixPart * x.conjugate() - x * F.J.matrixPart).norm(), 1e-9);
    }
}

TEST(Isometry, StructuralReductionOnClassicalPoint) {
    Rng rng(46);
    YukawaSet p = random_yukawa(rng, 3);
    FiniteRealSpectralTriple F = build_triple(p);
    CommutantReport c = classical_commutant_basis(F);
    Corepresentation u = assemble_U(make_gauge_point(rng.phase(), haar_unitary(rng, 3), 3));
    Report r = structural_reduction_check(F, p, c, u, 1e-8);
    EXPECT_TRUE(r.pass()) << r.max_residual();
}
