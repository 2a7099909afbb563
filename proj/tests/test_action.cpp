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

#include "ncqiso/action.hpp"
#include "ncqiso/isometry.hpp"
#include "ncqiso/smtriple.hpp"

using namespace ncqiso;

namespace {

double gaussian_trace_oracle(const CMatrix &m, double lambda) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es{Eigen::MatrixXcd(m), Eigen::EigenvaluesOnly};
    double s = 0.0;
    for (Index i = 0; i < es.eigenvalues().size(); i++) {
        double x = es.eigenvalues()(i) / lambda;
        s += std::exp(-x * x);
    }
    return s;
}

CVector unit_vector(Rng &rng, Index n) {
    CVector v(n);
    for (Index i = 0; i < n; i++) v(i) = rng.cnormal();
    return v / v.norm();
}

}  // namespace

TEST(Action, OneFormIsSelfAdjointAndFluctuationHermitian) {
    Rng rng(51);
    FiniteRealSpectralTriple F = build_triple(random_yukawa(rng, 3));
    OneForm A = random_one_form(rng, F);
    EXPECT_TRUE(A.selfAdjoint);
    EXPECT_LT((A.A - A.A.adjoint()).norm(), 1e-12);
    CMatrix DA = fluctuate(F, A);
    EXPECT_LT((DA - DA.adjoint()).norm(), 1e-11);
    // D_A = D + A + J A J^{-1} with eps' = 1.
    CMatrix jaj = F.J.matrixPart * A.A.conjugate() * F.J.matrixPart.adjoint();
    EXPECT_LT((DA - F.D - A.A - jaj).norm(), 1e-12);
    OneForm bad{A.A * cplx(0, 1) + identity(96), false};
    EXPECT_THROW(fluctuate(F, bad), ContractError);
}

TEST(Action, BosonicActionMatchesEigenvalueSum) {
    Rng rng(52);
    FiniteRealSpectralTriple F = build_triple(random_yukawa(rng, 3));
    CMatrix DA = fluctuate(F, random_one_form(rng, F));
    double lambda = 5.0;
    EXPECT_NEAR(bosonic_action(DA, gaussian_cutoff(lambda)), gaussian_trace_oracle(DA, lambda), 1e-10);
}

TEST(Action, CutoffKinds) {
    CutoffFunction poly;
    poly.kind = CutoffFunction::Kind::EvenPolynomial;
    poly.coefficients = {1.0, -0.5, 0.25};
    EXPECT_DOUBLE_EQ(poly(2.0), 1.0 - 0.5 * 4 + 0.25 * 16);
    EXPECT_DOUBLE_EQ(poly(-2.0), poly(2.0));
    EXPECT_DOUBLE_EQ(gaussian_cutoff()(1.0), std::exp(-1.0));
    CutoffFunction bad = gaussian_cutoff(-1.0);
    EXPECT_THROW(bad.validate(), ContractError);
}

TEST(Action, ClassicalSymmetryLeavesActionsInvariant) {
    Rng rng(53);
    FiniteRealSpectralTriple F = build_triple(random_yukawa(rng, 3));
    Corepresentation u = assemble_U(random_classical_point(rng, 3));
    OneForm A = random_one_form(rng, F);
    CVector psi = unit_vector(rng, 96);
    ActionReport r = extended_actions_invariance(u, F, A, psi, gaussian_cutoff(10.0));
    EXPECT_TRUE(r.pass()) << r.max_residual();
    EXPECT_NEAR(r.Sb, gaussian_trace_oracle(fluctuate(F, A), 10.0), 1e-9);
    // Oracle at d = 1: U D_A U* is isospectral with D_A.
    CMatrix DA = fluctuate(F, A);
    CMatrix rotated = u.U * DA * u.U.adjoint();
    EXPECT_NEAR(gaussian_trace_oracle(rotated, 10.0), r.Sb, 1e-9);
}

TEST(Action, FreePointActionsInvariantInMinimalRegime) {
    Rng rng(54);
    YukawaOptions o;
    o.zeroNu = true;
    FiniteRealSpectralTriple F = build_triple(random_yukawa(rng, 3, o));
    Corepresentation u = assemble_U(make_free_point(rng, 3, 2));
    ActionReport r = extended_actions_invariance(u, F, random_one_form(rng, F), unit_vector(rng, 96),
                                                 gaussian_cutoff(8.0));
    EXPECT_TRUE(r.pass()) << r.max_residual();
}

TEST(Action, FermionicPlainVanishesOnPositiveChirality) {
    Rng rng(55);
    FiniteRealSpectralTriple F = build_triple(random_yukawa(rng, 3));
    OneForm A = random_one_form(rng, F);
    CVector psi = unit_vector(rng, 96);
    EXPECT_NEAR(std::abs(fermionic_action(F, A, psi, FermionVariant::Plain)), 0.0, 1e-12);
    CMatrix p = positive_projector(F);
    EXPECT_LT((p * p - p).norm(), 1e-13);
    EXPECT_NEAR(p.trace().real(), 48.0, 1e-12);
}

TEST(Action, TraceIdentityDetectsTransposeUnitarity) {
    Rng rng(56);
    BlockMatrix h(2, 2, 2, haar_unitary(rng, 4));
    BlockMatrix perm(2, 2, 2);
    perm.block(0, 1) = identity(2);
    perm.block(1, 0) = identity(2);
    EXPECT_TRUE(trace_identity_all_units(perm).pass());
    bool tu = is_biunitary(h).isTransposeUnitary;
    EXPECT_EQ(trace_identity_all_units(h).pass(), tu);
    // Swap: unitary with a non-unitary block transpose.
    BlockMatrix swap(2, 2, 2);
    for (Index i = 0; i < 2; i++)
        for (Index j = 0; j < 2; j++) swap.block(i, j) = unit(2, j, i);
    EXPECT_FALSE(is_biunitary(swap).isTransposeUnitary);
    EXPECT_FALSE(trace_identity_all_units(swap).pass());
}
