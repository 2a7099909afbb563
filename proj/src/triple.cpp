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

#include "ncqiso/triple.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Sparse>

namespace ncqiso {

namespace {

using SparseC = SMatrix;


}  // namespace

Index BlockAlgebra::offset(Index s) const {
    Index o = 0;
    for (Index t = 0; t < s; t++) {
        o += summandDims[t] * summandDims[t];
    }
    return o;
}

CMatrix BlockAlgebra::embed(const std::vector<CMatrix> &blocks) const {
    if (blocks.size() != summandDims.size()) {
        throw ShapeError("embed: expected " + std::to_string(summandDims.size()) + " summand blocks, got " +
                         std::to_string(blocks.size()));
    }
    if (images.empty()) {
        throw ShapeError("embed: algebra has no images");
    }
    CMatrix out = CMatrix::Zero(images[0].rows(), images[0].cols());
    for (size_t s = 0; s < blocks.size(); s++) {
        Index k = summandDims[s];
        require_shape(blocks[s], k, k, "embed summand " + std::to_string(s));
        for (Index i = 0; i < k; i++) {
            for (Index j = 0; j < k; j++) {
                cplx c = blocks[s](i, j);
                if (c != cplx(0)) {
                    out += c * E(Index(s), i, j);
                }
            }
        }
    }
    return out;
}

BlockAlgebra BlockAlgebra::tensor(const BlockAlgebra &other) const {
    BlockAlgebra out;
    for (size_t s = 0; s < summandDims.size(); s++) {
        for (size_t t = 0; t < other.summandDims.size(); t++) {
            Index k1 = summandDims[s];
            Index k2 = other.summandDims[t];
            out.summandDims.push_back(k1 * k2);
            // Unit (i1 i2, j1 j2) of M_{k1 k2} = M_{k1} (x) M_{k2}, row-major pairs.
            for (Index i = 0; i < k1 * k2; i++) {
                for (Index j = 0; j < k1 * k2; j++) {
                    out.images.push_back(kron(E(Index(s), i / k2, j / k2), other.E(Index(t), i % k2, j % k2)));
                }
            }
        }
    }
    return out;
}

Report check_embedding(const BlockAlgebra &alg, double tol) {
    Report r;
    if (alg.images.empty()) {
        r.add_flag("embedding_nonempty", false);
        return r;
    }
    Index dim = alg.images[0].rows();
    std::vector<SparseC> sp;
    for (const auto &m : alg.images) {
        sp.push_back(sparse_of(m));
    }
    double prod = 0.0;
    double adj = 0.0;
    CMatrix sum = CMatrix::Zero(dim, dim);
    for (size_t s = 0; s < alg.summandDims.size(); s++) {
        Index k = alg.summandDims[s];
        for (Index i = 0; i < k; i++) {
            for (Index j = 0; j < k; j++) {
                Index a = alg.index(Index(s), i, j);
                adj = std::max(adj, scaled_residual(alg.images[a].adjoint() - alg.E(Index(s), j, i)));
                if (i == j) {
                    sum += alg.images[a];
                }
                for (size_t t = 0; t < alg.summandDims.size(); t++) {
                    Index k2 = alg.summandDims[t];
                    for (Index p = 0; p < k2; p++) {
                        for (Index q = 0; q < k2; q++) {
                            Index b = alg.index(Index(t), p, q);
                            CMatrix lhs = sp[a] * sp[b];
                            if (s == t && j == p) {
                                lhs -= alg.E(Index(s), i, q);
                            }
                            prod = std::max(prod, scaled_residual(lhs));
                        }
                    }
                }
            }
        }
    }
    r.add("embedding_products", prod, tol);
    r.add("embedding_adjoints", adj, tol);
    r.add("embedding_unit", scaled_residual(sum - identity(dim)), tol);
    return r;
}

namespace {

double j_square_residual(const CMatrix &jm, int eps) {
    return scaled_residual(jm * jm.conjugate() - double(eps) * identity(jm.rows()));
}

double j_op_residual(const CMatrix &jm, const CMatrix &op, int sign) {
    return scaled_residual(jm * op.conjugate() - double(sign) * op * jm, rms_norm(op));
}

int best_sign(double plus, double minus) { return minus < plus ? -1 : 1; }

}  // namespace

KOSigns measure_signs(const FiniteRealSpectralTriple &t) {
    const CMatrix &jm = t.J.matrixPart;
    KOSigns s;
    s.eps = best_sign(j_square_residual(jm, 1), j_square_residual(jm, -1));
    s.epsPrime = best_sign(j_op_residual(jm, t.D, 1), j_op_residual(jm, t.D, -1));
    if (t.even()) {
        s.epsDoublePrime = best_sign(j_op_residual(jm, *t.gamma, 1), j_op_residual(jm, *t.gamma, -1));
    }
    return s;
}

AxiomReport check_axioms(const FiniteRealSpectralTriple &t, double tol) {
    Index n = t.dimH;
    require_shape(t.D, n, n, "check_axioms D");
    require_shape(t.J.matrixPart, n, n, "check_axioms J");
    if (t.gamma) {
        require_shape(*t.gamma, n, n, "check_axioms gamma");
    }
    for (const auto &e : t.algebra.images) {
        require_shape(e, n, n, "check_axioms algebra image");
    }
    AxiomReport r;
    r.measured = measure_signs(t);
    double dscale = rms_norm(t.D);
    const CMatrix &jm = t.J.matrixPart;

    r.merge(check_embedding(t.algebra, tol));
    r.add("D_selfadjoint", scaled_residual(t.D - t.D.adjoint(), dscale), tol);
    r.add("J_unitary", unitarity_residual(jm) / std::sqrt(double(n)), tol);
    r.add("J_square", j_square_residual(jm, t.signs.eps), tol);
    r.add("J_D", j_op_residual(jm, t.D, t.signs.epsPrime), tol);

    std::vector<SparseC> alg;
    std::vector<SparseC> opp;
    for (const auto &e : t.algebra.images) {
        alg.push_back(sparse_of(e));
        opp.push_back(sparse_of(t.J.conjugate_op(e)));
    }

    if (t.gamma) {
        const CMatrix &g = *t.gamma;
        r.add("gamma_square", scaled_residual(g * g - identity(n)), tol);
        r.add("gamma_selfadjoint", scaled_residual(g - g.adjoint()), tol);
        r.add("gamma_anticommutes_D", scaled_residual(g * t.D + t.D * g, dscale), tol);
        r.add("J_gamma", j_op_residual(jm, g, t.signs.epsDoublePrime), tol);
        double gc = 0.0;
        for (const auto &a : alg) {
            CMatrix c = g * a - a * g;
            gc = std::max(gc, scaled_residual(c));
        }
        r.add("gamma_commutes_algebra", gc, tol);
    }

    double order0 = 0.0;
    double order1 = 0.0;
    for (size_t a = 0; a < alg.size(); a++) {
        CMatrix da = t.D * alg[a] - alg[a] * t.D;
        for (size_t b = 0; b < opp.size(); b++) {
            SparseC c0 = alg[a] * opp[b] - opp[b] * alg[a];
            order0 = std::max(order0, c0.norm() / std::sqrt(double(n)));
            CMatrix c1 = da * opp[b] - opp[b] * da;
            order1 = std::max(order1, scaled_residual(c1, dscale));
        }
    }
    r.add("order_zero", order0, tol);
    r.add("first_order", order1, tol);
    r.add_flag("signs_match_measured", r.measured == t.signs);
    return r;
}

FiniteRealSpectralTriple product_triple(const FiniteRealSpectralTriple &t1, const FiniteRealSpectralTriple &t2) {
    if (!t2.even()) {
        throw ContractError("product_triple: second factor must be even");
    }
    FiniteRealSpectralTriple p;
    p.dimH = t1.dimH * t2.dimH;
    p.algebra = t1.algebra.tensor(t2.algebra);
    p.D = kron(t1.D, *t2.gamma) + kron(identity(t1.dimH), t2.D);
    p.gamma = kron(t1.grading(), *t2.gamma);
    p.J = t1.J.tensor(t2.J);
    p.signs = measure_signs(p);
    return p;
}

FiniteRealSpectralTriple trivial_triple() {
    FiniteRealSpectralTriple t;
    t.dimH = 1;
    t.algebra.summandDims = {1};
    t.algebra.images = {identity(1)};
    t.D = zeros(1, 1);
    t.J.matrixPart = identity(1);
    t.signs = {1, 1, 1};
    return t;
}

FiniteRealSpectralTriple toy_even_triple(double m) {
    CMatrix sx(2, 2), sz(2, 2), swap = zeros(4, 4);
    sx << 0, 1, 1, 0;
    sz << 1, 0, 0, -1;
    for (Index i = 0; i < 2; i++) {
        for (Index j = 0; j < 2; j++) {
            swap(i * 2 + j, j * 2 + i) = 1.0;
        }
    }
    FiniteRealSpectralTriple t;
    t.dimH = 4;
    t.algebra.summandDims = {1, 1};
    t.algebra.images = {kron(unit(2, 0, 0), identity(2)), kron(unit(2, 1, 1), identity(2))};
    t.D = m * (kron(sx, identity(2)) - kron(identity(2), sx));
    t.gamma = kron(sz, sz);
    t.J.matrixPart = swap;
    t.signs = {1, -1, 1};
    return t;
}

FiniteRealSpectralTriple toy_odd_triple(double m1, double m2) {
    FiniteRealSpectralTriple t;
    t.dimH = 2;
    t.algebra.summandDims = {1, 1};
    t.algebra.images = {unit(2, 0, 0), unit(2, 1, 1)};
    t.D = zeros(2, 2);
    t.D(0, 0) = m1;
    t.D(1, 1) = m2;
    t.J.matrixPart = identity(2);
    t.signs = {1, 1, 1};
    return t;
}

}  // namespace ncqiso
