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

#include "ncqiso/cqgrep.hpp"
#include "ncqiso/smtriple.hpp"

using namespace ncqiso;

TEST(Cqgrep, IdentityPointPassesExactly) {
    Rng rng(31);
    YukawaSet p = random_yukawa(rng, 3);
    Report r = check_generator_relations(make_identity_point(3), p);
    EXPECT_TRUE(r.pass());
    EXPECT_LT(r.max_residual(), 1e-14);
}

TEST(Cqgrep, ClassicalGaugeAndBaryonPointsPass) {
    Rng rng(32);
    YukawaSet p = random_yukawa(rng, 3);
    EXPECT_TRUE(check_generator_relations(random_classical_point(rng, 3), p).pass());
    EXPECT_TRUE(check_generator_relations(make_gauge_point(rng.phase(), haar_unitary(rng, 3), 3), p).pass());
    EXPECT_TRUE(check_generator_relations(make_baryon_point(rng.phase(), 3), p).pass());
}

TEST(Cqgrep, GaugePointHasExpectedGenerators) {
    cplx z = std::polar(1.0, 0.3);
    Rng rng(33);
    CMatrix t = haar_unitary(rng, 3);
    RepresentedGenerators g = make_gauge_point(z, t, 3);
    EXPECT_NEAR(std::abs(g.x0()(0, 0) - z * z * z), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(g.x[1](0, 0) - std::conj(z * z * z)), 0.0, 1e-15);
    for (Index j = 0; j < 3; j++)
        for (Index k = 0; k < 3; k++) EXPECT_NEAR(std::abs(g.T[0].block(j, k)(0, 0) - z * z * t(j, k)), 0.0, 1e-15);
}

TEST(Cqgrep, AntidiagonalIsHalfLiberatedAndFreeIsNot) {
    Rng rng(34);
    BlockMatrix a = antidiagonal_biunitary(haar_unitary(rng, 3), haar_unitary(rng, 3));
    EXPECT_TRUE(is_biunitary(a).biunitary());
    EXPECT_LT(half_liberation_residual(a), 1e-12);
    EXPECT_LT(projective_commutativity_residual(a), 1e-12);
    BlockMatrix f = free_biunitary(rng, 2);
    EXPECT_TRUE(is_biunitary(f).biunitary());
    EXPECT_GT(half_liberation_residual(f), 1e-3);
}

TEST(Cqgrep, FreePointNeedsZeroNeutrinoCoupling) {
    Rng rng(35);
    RepresentedGenerators g = make_free_point(rng, 3, 2);
    EXPECT_FALSE(check_generator_relations(g, random_yukawa(rng, 3)).pass());
    YukawaOptions o;
    o.zeroNu = true;
    EXPECT_TRUE(check_generator_relations(g, random_yukawa(rng, 3, o)).pass());
}

TEST(Cqgrep, CkmViolatingPointFails) {
    Rng rng(36);
    YukawaSet p = random_yukawa(rng, 3);
    EXPECT_FALSE(check_generator_relations(make_ckm_violating_point(rng, 3), p).pass());
}

TEST(Cqgrep, ConvolutionWithIdentityIsNeutral) {
    Rng rng(37);
    RepresentedGenerators c = random_classical_point(rng, 3);
    RepresentedGenerators e = make_identity_point(3);
    RepresentedGenerators l = convolve(e, c);
    RepresentedGenerators r = convolve(c, e);
    ASSERT_EQ(l.d, 1);
    for (size_t k = 0; k < c.x.size(); k++) {
        EXPECT_LT((l.x[k] - c.x[k]).norm(), 1e-14);
        EXPECT_LT((r.x[k] - c.x[k]).norm(), 1e-14);
    }
    EXPECT_LT((l.V.data - c.V.data).norm(), 1e-14);
}

TEST(Cqgrep, DirectSumDimensionsAdd) {
    Rng rng(38);
    RepresentedGenerators a = make_antidiagonal_point(3, haar_unitary(rng, 3), haar_unitary(rng, 3),
                                                      haar_unitary(rng, 2));
    RepresentedGenerators s = direct_sum(random_classical_point(rng, 3), a);
    EXPECT_EQ(s.d, 3);
    EXPECT_TRUE(check_generator_relations(s, random_yukawa(rng, 3)).pass());
}
