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
#include "ncqiso/realform.hpp"

using namespace ncqiso;

TEST(RealForm, SigmaIsAnInvolutiveAntiAutomorphism) {
    Rng rng(61);
    for (int i = 0; i < 5; i++) {
        ComplexifiedElement a = random_complexified(rng);
        ComplexifiedElement b = random_complexified(rng);
        EXPECT_LT(distance(sigma_map(sigma_map(a)), a), 1e-14);
        EXPECT_LT(distance(sigma_map(multiply(a, b)), multiply(sigma_map(a), sigma_map(b))), 1e-12);
    }
}

TEST(RealForm, EmbeddedRealElementsAreFixed) {
    Rng rng(62);
    CMatrix q = zeros(2, 2);
    // Quaternion a + b j as [[a, b], [-conj(b), conj(a)]].
    cplx a = rng.cnormal(), b = rng.cnormal();
    q << a, b, -std::conj(b), std::conj(a);
    ComplexifiedElement e = embed_real(rng.cnormal(), q, random_gaussian(rng, 3, 3));
    EXPECT_TRUE(is_in_real_form(e));
    EXPECT_LT(membership_residual(e), 1e-14);
    ComplexifiedElement r = random_complexified(rng);
    EXPECT_FALSE(is_in_real_form(r));
}

TEST(RealForm, PauliY) {
    CMatrix s = pauli_y();
    EXPECT_LT((s * s - identity(2)).norm(), 1e-15);
    EXPECT_EQ(s(0, 1), cplx(0, -1));
}

TEST(RealForm, ExtensionMatchesHalfLiberation) {
    Rng rng(63);
    RepresentedGenerators anti =
        make_antidiagonal_point(3, haar_unitary(rng, 3), haar_unitary(rng, 3), haar_unitary(rng, 2));
    Report ra = extended_coaction_check(anti);
    EXPECT_TRUE(ra.find("multiplicativity")->pass);
    EXPECT_TRUE(ra.find("flag_agreement")->pass);
    Report rf = extended_coaction_check(make_free_point(rng, 3, 2));
    EXPECT_FALSE(rf.find("multiplicativity")->pass);
    EXPECT_TRUE(rf.find("flag_agreement")->pass);
}

TEST(RealForm, ClassicalCoactionRespectsSigma) {
    Rng rng(64);
    RepresentedGenerators g = random_classical_point(rng, 3);
    Report r = classical_sigma_check(g, rng, 5);
    EXPECT_TRUE(r.pass()) << r.max_residual();
}
