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

#ifndef NCQISO_REALFORM_HPP
#define NCQISO_REALFORM_HPP

#include "ncqiso/cqgrep.hpp"
#include "ncqiso/numlin.hpp"
#include "ncqiso/report.hpp"
#include "ncqiso/rng.hpp"

namespace ncqiso {

// (lambda, lambda', q, m, m') in C + C + M_2(C) + M_3(C) + M_3(C).
struct ComplexifiedElement {
    cplx lambda = 0.0;
    cplx lambdaPrime = 0.0;
    CMatrix q = CMatrix::Zero(2, 2);
    CMatrix m = CMatrix::Zero(3, 3);
    CMatrix mPrime = CMatrix::Zero(3, 3);
};

CMatrix pauli_y();

ComplexifiedElement sigma_map(const ComplexifiedElement &e);
ComplexifiedElement multiply(const ComplexifiedElement &a, const ComplexifiedElement &b);
ComplexifiedElement random_complexified(Rng &rng);
// The real algebra element (lambda, q, m) as a fixed point of sigma.
ComplexifiedElement embed_real(cplx lambda, const CMatrix &q, const CMatrix &m);
// Largest deviation from lambda' = conj(lambda), s2 conj(q) s2 = q, m' = conj(m).
double membership_residual(const ComplexifiedElement &e);
bool is_in_real_form(const ComplexifiedElement &e, double tol = kDefaultTol);
double distance(const ComplexifiedElement &a, const ComplexifiedElement &b);

// Multiplicativity of the coaction extended to the fifth summand by
// e'_ij -> sum_kl e'_kl (x) (T)_lj* (T)_ki, checked on matrix units for every T_m and its block
// transpose. Also reports the half-liberation residual, the derived four-term relation and
// whether the two verdicts agree.
Report extended_coaction_check(const RepresentedGenerators &g, double tol = kDefaultTol);
double extended_multiplicativity_residual(const BlockMatrix &t);
// sum_v (T_vj)* T_ki (T_ls)* T_vr - delta_jr (T_ls)* T_ki.
double derived_relation_residual(const BlockMatrix &t);

// Coaction of a d = 1 generator point on (A_F)_C.
ComplexifiedElement classical_coaction(const RepresentedGenerators &g, const ComplexifiedElement &e);
// sigma o alpha = alpha o sigma at a d = 1 point, on random elements.
Report classical_sigma_check(const RepresentedGenerators &g, Rng &rng, int samples = 10, double tol = kDefaultTol);

}  // namespace ncqiso

#endif
