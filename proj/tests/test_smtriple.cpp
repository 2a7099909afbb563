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

using namespace ncqiso;

TEST(SmTriple, ValidParamsPass) {
    Rng rng(21);
    for (int i = 0; i < 5; i++) {
        YukawaSet p = random_yukawa(rng, 3);
        EXPECT_TRUE(validate_params(p).pass());
    }
    YukawaOptions o;
    o.zeroNu = true;
    ValidationReport v = validate_params(random_yukawa(rng, 3, o));
    EXPECT_TRUE(v.pass());
    EXPECT_TRUE(v.minimalRegime);
}

TEST(SmTriple, DegenerateSpectrumRejected) {
    Rng rng(22);
    YukawaSet p = random_yukawa(rng, 3);
    p.upsE(1, 1) = p.upsE(0, 0);
    EXPECT_FALSE(validate_params(p).pass());
    EXPECT_THROW(build_triple(p), InvalidParams);
}

TEST(SmTriple, NonHermitianDownRejected) {
    Rng rng(23);
    YukawaSet p = random_yukawa(rng, 3);
    p.upsD(0, 1) += cplx(0.5, 0.0);
    EXPECT_FALSE(validate_params(p).pass());
}

TEST(SmTriple, CkmExtractionRecoversConjugation) {
    Rng rng(24);
    CMatrix c = haar_unitary(rng, 3);
    RVector d(3);
    d << 1.0, 2.0, 3.0;
    CMatrix ups = c * CMatrix(d.cast<cplx>().asDiagonal()) * c.adjoint();
    CkmDecomposition k = extract_ckm(ups);
    EXPECT_LT((k.C * k.deltaDown * k.C.adjoint() - ups).norm(), 1e-12);
    EXPECT_LT((k.C * k.C.adjoint() - identity(3)).norm(), 1e-12);
    EXPECT_LT((k.deltaDown - CMatrix(k.deltaDown.diagonal().asDiagonal())).norm(), 1e-12);
}

TEST(SmTriple, BasisLabelsRoundTrip) {
    for (Index i = 0; i < 96; i++) EXPECT_EQ(basis_index(label_basis(i, 3), 3), i);
    EXPECT_THROW(label_basis(96, 3), std::out_of_range);
}

TEST(SmTriple, SectorProjectorsPartitionH) {
    CMatrix sum = zeros(96, 96);
    for (int s = 1; s <= 4; s++) {
        CMatrix p = sector_projector(s, 3);
        EXPECT_LT((p * p - p).norm(), 1e-14);
        sum += p;
    }
    EXPECT_LT((sum - identity(96)).norm(), 1e-14);
}

TEST(SmTriple, DiracCouplesOnlyOppositeChiralities) {
    Rng rng(25);
    YukawaSet p = random_yukawa(rng, 3);
    CMatrix d = sm_dirac(p);
    CMatrix g = sm_grading(3);
    EXPECT_LT((g * d + d * g).norm(), 1e-12);
    // The electron Yukawa appears between e_L and e_R.
    SMBasisLabel l{Isospin::Down, ColorSector::Lepton, Chirality::PL, 1};
    SMBasisLabel r{Isospin::Down, ColorSector::Lepton, Chirality::PR, 1};
    double mag = std::abs(d(basis_index(l, 3), basis_index(r, 3)));
    EXPECT_NEAR(mag, std::abs(p.upsE(0, 0)), 1e-12);
}
