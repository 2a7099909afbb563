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

#include "ncqiso/realform.hpp"

#include <algorithm>
#include <cmath>

namespace ncqiso {

CMatrix pauli_y() {
    CMatrix s(2, 2);
    s << 0.0, cplx(0, -1), cplx(0, 1), 0.0;
    return s;
}

ComplexifiedElement sigma_map(const ComplexifiedElement &e) {
    CMatrix s = pauli_y();
    ComplexifiedElement out;
    out.lambda = std::conj(e.lambdaPrime);
    out.lambdaPrime = std::conj(e.lambda);
    out.q = s * e.q.conjugate() * s;
    out.m = e.mPrime.conjugate();
    out.mPrime = e.m.conjugate();
    return out;
}

ComplexifiedElement multiply(const ComplexifiedElement &a, const ComplexifiedElement &b) {
    ComplexifiedElement out;
    out.lambda = a.lambda * b.lambda;
    out.lambdaPrime = a.lambdaPrime * b.lambdaPrime;
    out.q = a.q * b.q;
    out.m = a.m * b.m;
    out.mPrime = a.mPrime * b.mPrime;
    return out;
}

ComplexifiedElement random_complexified(Rng &rng) {
    ComplexifiedElement e;
    e.lambda = rng.cnormal();
    e.lambdaPrime = rng.cnormal();
    e.q = random_gaussian(rng, 2, 2);
    e.m = random_gaussian(rng, 3, 3);
    e.mPrime = random_gaussian(rng, 3, 3);
    return e;
}

ComplexifiedElement embed_real(cplx lambda, const CMatrix &q, const CMatrix &m) {
    require_shape(q, 2, 2, "embed_real q");
    require_shape(m, 3, 3, "embed_real m");
    ComplexifiedElement e;
    e.lambda = lambda;
    e.lambdaPrime = std::conj(lambda);
    e.q = q;
    e.m = m;
    e.mPrime = m.conjugate();
    return e;
}

double membership_residual(const ComplexifiedElement &e) {
    CMatrix s = pauli_y();
    return std::max({std::abs(e.lambdaPrime - std::conj(e.lambda)), (s * e.q.conjugate() * s - e.q).norm(),
                     (e.mPrime - e.m.conjugate()).norm()});
}

bool is_in_real_form(const ComplexifiedElement &e, double tol) { return membership_residual(e) <= tol; }

double distance(const ComplexifiedElement &a, const ComplexifiedElement &b) {
    return std::max({std::abs(a.lambda - b.lambda), std::abs(a.lambdaPrime - b.lambdaPrime), (a.q - b.q).norm(),
                     (a.m - b.m).norm(), (a.mPrime - b.mPrime).norm()});
}

double extended_multiplicativity_residual(const BlockMatrix &t) {
    Index k = t.blockRows;
    // c[(k,l),(i,j)] = (T_lj)* T_ki
    auto coef = [&](Index kk, Index l, Index i, Index j) -> CMatrix { return t.block(l, j).adjoint() * t.block(kk, i); };
    std::vector<CMatrix> c(size_t(k * k * k * k));
    auto at = [&](Index kk, Index l, Index i, Index j) -> CMatrix & {
        return c[size_t(((kk * k + l) * k + i) * k + j)];
    };
    for (Index a = 0; a < k; a++) {
        for (Index b = 0; b < k; b++) {
            for (Index i = 0; i < k; i++) {
                for (Index j = 0; j < k; j++) {
                    at(a, b, i, j) = coef(a, b, i, j);
                }
            }
        }
    }
    CMatrix zero = CMatrix::Zero(t.blockDim, t.blockDim);
    double res = 0.0;
    for (Index i = 0; i < k; i++) {
        for (Index j = 0; j < k; j++) {
            for (Index p = 0; p < k; p++) {
                for (Index q = 0; q < k; q++) {
                    for (Index a = 0; a < k; a++) {
                        for (Index b = 0; b < k; b++) {
                            CMatrix s = zero;
                            for (Index l = 0; l < k; l++) {
                                s += at(a, l, i, j) * at(l, b, p, q);
                            }
                            if (j == p) {
                                s -= at(a, b, i, q);
                            }
                            res = std::max(res, scaled_residual(s));
                        }
                    }
                }
            }
        }
    }
    return res;
}

double derived_relation_residual(const BlockMatrix &t) {
    Index k = t.blockRows;
    double res = 0.0;
    for (Index j = 0; j < k; j++) {
        for (Index kk = 0; kk < k; kk++) {
            for (Index i = 0; i < k; i++) {
                for (Index l = 0; l < k; l++) {
                    for (Index s = 0; s < k; s++) {
                        CMatrix mid = t.block(kk, i) * t.block(l, s).adjoint();
                        for (Index r = 0; r < k; r++) {
                            CMatrix acc = CMatrix::Zero(t.blockDim, t.blockDim);
                            for (Index v = 0; v < k; v++) {
                                acc += t.block(v, j).adjoint() * mid * t.block(v, r);
                            }
                            if (j == r) {
                                acc -= t.block(l, s).adjoint() * t.block(kk, i);
                            }
                            res = std::max(res, scaled_residual(acc));
                        }
                    }
                }
            }
        }
    }
    return res;
}

Report extended_coaction_check(const RepresentedGenerators &g, double tol) {
    g.validate_shapes();
    double mult = 0.0;
    double derived = 0.0;
    for (const auto &t : g.T) {
        mult = std::max({mult, extended_multiplicativity_residual(t),
                         extended_multiplicativity_residual(block_transpose(t))});
        derived = std::max(derived, derived_relation_residual(t));
    }
    Report hl = check_half_liberation(g, tol);
    Report r;
    r.add("multiplicativity", mult, tol);
    bool hlPass = hl.find("half_liberation")->pass;
    r.add_flag("flag_agreement", (mult < tol) == hlPass);
    r.note("half_liberation_residual", hl.residual("half_liberation"));
    r.note("projective_commutativity_residual", hl.residual("projective_commutativity"));
    r.note("derived_relation_residual", derived);
    return r;
}

ComplexifiedElement classical_coaction(const RepresentedGenerators &g, const ComplexifiedElement &e) {
    g.validate_shapes();
    if (g.d != 1) {
        throw ContractError("classical_coaction: needs a d = 1 point, got d = " + std::to_string(g.d));
    }
    cplx x0 = g.x0()(0, 0);
    const CMatrix &t = g.T[0].data;
    ComplexifiedElement out = e;
    out.q(0, 1) = x0 * e.q(0, 1);
    out.q(1, 0) = std::conj(x0) * e.q(1, 0);
    out.m = t.conjugate() * e.m * t.transpose();
    out.mPrime = t * e.mPrime * t.adjoint();
    return out;
}

Report classical_sigma_check(const RepresentedGenerators &g, Rng &rng, int samples, double tol) {
    double eq = 0.0;
    double mult = 0.0;
    double real = 0.0;
    for (int s = 0; s < samples; s++) {
        ComplexifiedElement a = random_complexified(rng);
        ComplexifiedElement b = random_complexified(rng);
        eq = std::max(eq, distance(sigma_map(classical_coaction(g, a)), classical_coaction(g, sigma_map(a))));
        mult = std::max(mult, distance(classical_coaction(g, multiply(a, b)),
                                       multiply(classical_coaction(g, a), classical_coaction(g, b))));
        ComplexifiedElement fixed = embed_real(rng.cnormal(), random_gaussian(rng, 2, 2), random_gaussian(rng, 3, 3));
        fixed.q = (fixed.q + sigma_map(fixed).q) / 2.0;
        real = std::max(real, membership_residual(classical_coaction(g, fixed)));
    }
    Report r;
    r.add("sigma_equivariance", eq, tol);
    r.add("coaction_multiplicative", mult, tol);
    r.add("preserves_real_form", real, tol);
    return r;
}

}  // namespace ncqiso
