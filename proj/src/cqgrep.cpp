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

#include "ncqiso/cqgrep.hpp"

#include <algorithm>
#include <cmath>

namespace ncqiso {

void RepresentedGenerators::validate_shapes() const {
    if (n < 1 || d < 1) {
        throw ShapeError("generators: n and d must be positive");
    }
    if (Index(x.size()) != n + 1) {
        throw ShapeError("generators: expected " + std::to_string(n + 1) + " x matrices, got " +
                         std::to_string(x.size()));
    }
    for (size_t k = 0; k < x.size(); k++) {
        require_shape(x[k], d, d, "generators x[" + std::to_string(k) + "]");
    }
    if (Index(T.size()) != n) {
        throw ShapeError("generators: expected " + std::to_string(n) + " T blocks, got " + std::to_string(T.size()));
    }
    for (size_t m = 0; m < T.size(); m++) {
        if (T[m].blockRows != 3 || T[m].blockCols != 3 || T[m].blockDim != d) {
            throw ShapeError("generators T[" + std::to_string(m) + "]: expected 3x3 blocks of dim " +
                             std::to_string(d) + ", got " + shape_str(T[m].blockRows, T[m].blockCols) +
                             " blocks of dim " + std::to_string(T[m].blockDim));
        }
    }
    if (V.blockRows != n || V.blockCols != n || V.blockDim != d) {
        throw ShapeError("generators V: expected " + shape_str(n, n) + " blocks of dim " + std::to_string(d) +
                         ", got " + shape_str(V.blockRows, V.blockCols) + " blocks of dim " +
                         std::to_string(V.blockDim));
    }
}

BlockMatrix block_diag(const std::vector<CMatrix> &blocks) {
    Index d = blocks.empty() ? 1 : blocks[0].rows();
    BlockMatrix b(Index(blocks.size()), Index(blocks.size()), d);
    for (size_t i = 0; i < blocks.size(); i++) {
        b.block(Index(i), Index(i)) = blocks[i];
    }
    return b;
}

namespace {

double biunitary_residual(const BlockMatrix &b) {
    BiunitaryReport r = is_biunitary(b, 1.0);
    double m = *std::max_element(r.residuals, r.residuals + 4);
    return m / std::sqrt(double(b.data.rows()));
}

double offdiag_block_norm(const BlockMatrix &b) {
    double s = 0.0;
    for (Index i = 0; i < b.blockRows; i++) {
        for (Index j = 0; j < b.blockCols; j++) {
            if (i != j) {
                s += b.block(i, j).squaredNorm();
            }
        }
    }
    return std::sqrt(s);
}

}  // namespace

Report check_generator_relations(const RepresentedGenerators &g, const YukawaSet &p, double tol) {
    g.validate_shapes();
    if (p.n != g.n) {
        throw ShapeError("check_generator_relations: generators have n=" + std::to_string(g.n) + ", parameters n=" +
                         std::to_string(p.n));
    }
    Index n = g.n;
    Index d = g.d;
    Report r;

    double xu = 0.0;
    for (const auto &x : g.x) {
        xu = std::max(xu, unitarity_residual(x) / std::sqrt(double(d)));
    }
    r.add("unitarity_x", xu, tol);
    double tb = 0.0;
    for (const auto &t : g.T) {
        tb = std::max(tb, biunitary_residual(t));
    }
    r.add("biunitarity_T", tb, tol);
    r.add("biunitarity_V", biunitary_residual(g.V), tol);

    // Upsilon_nu relations: diag(x0 xk) Y = Y diag(x0 xk) = Vbar Y = Y Vbar.
    std::vector<CMatrix> xx;
    for (Index k = 1; k <= n; k++) {
        xx.push_back(g.x0() * g.x[k]);
    }
    CMatrix xd = block_diag(xx).data;
    CMatrix y = kron(p.upsNu, identity(d));
    CMatrix vbar = block_bar(g.V).data;
    double yscale = rms_norm(y);
    r.add("ynu_commutes_x0xk", scaled_residual(xd * y - y * xd, yscale), tol);
    r.add("ynu_x0xk_vbar", scaled_residual(y * xd - vbar * y, yscale), tol);
    r.add("ynu_commutes_vbar", scaled_residual(vbar * y - y * vbar, yscale), tol);

    CMatrix rr = kron(p.upsR, identity(d));
    r.add("upsR_twist", scaled_residual(g.V.data * rr - rr * vbar, rms_norm(rr)), tol);

    // C* diag_m((T_m)_jk) C is diagonal in the generation index.
    CMatrix c = kron(ckm_of(p), identity(d));
    double ckm = 0.0;
    for (Index j = 0; j < 3; j++) {
        for (Index k = 0; k < 3; k++) {
            std::vector<CMatrix> entries;
            for (Index m = 0; m < n; m++) {
                entries.push_back(g.T[m].block(j, k));
            }
            BlockMatrix conj(n, n, d, c.adjoint() * block_diag(entries).data * c);
            ckm = std::max(ckm, offdiag_block_norm(conj) / std::sqrt(double(n * d)));
        }
    }
    r.add("ckm_sum", ckm, tol);

    // (T_m*)_ij (T_m)_kl independent of m, with (T*)_ij = (T_ji)*.
    double amalg = 0.0;
    for (Index m = 1; m < n; m++) {
        for (Index i = 0; i < 3; i++) {
            for (Index j = 0; j < 3; j++) {
                for (Index k = 0; k < 3; k++) {
                    for (Index l = 0; l < 3; l++) {
                        CMatrix a = g.T[m].block(j, i).adjoint() * g.T[m].block(k, l);
                        CMatrix b = g.T[0].block(j, i).adjoint() * g.T[0].block(k, l);
                        amalg = std::max(amalg, scaled_residual(a - b));
                    }
                }
            }
        }
    }
    r.add("amalgamation", amalg, tol);
    return r;
}

Report check_au_R_relations(const BlockMatrix &u, const CMatrix &R, double tol) {
    if (!u.square()) {
        throw ShapeError("check_au_R_relations: block grid " + shape_str(u.blockRows, u.blockCols) + " not square");
    }
    require_shape(R, u.blockRows, u.blockRows, "check_au_R_relations R");
    if (scaled_residual(R - R.adjoint(), rms_norm(R)) > tol) {
        throw ContractError("check_au_R_relations: R is not self-adjoint");
    }
    RVector ev = hermitian_eigenvalues(R, 1e300);
    if (ev(0) <= tol * std::max(1.0, ev(ev.size() - 1))) {
        throw ContractError("check_au_R_relations: R is not positive invertible");
    }
    Index d = u.blockDim;
    Index dim = u.data.rows();
    CMatrix rp = kron(R, identity(d));
    CMatrix rinv = kron(Eigen::MatrixXcd(R).inverse(), identity(d));
    CMatrix twisted = rp * block_bar(u).data * rinv;
    CMatrix ut = block_transpose(u).data;
    CMatrix id = identity(dim);
    Report r;
    r.add("u_unitary", std::max(scaled_residual(u.data * u.data.adjoint() - id),
                                scaled_residual(u.data.adjoint() * u.data - id)),
          tol);
    r.add("R_twisted", std::max(scaled_residual(ut * twisted - id), scaled_residual(twisted * ut - id)), tol);
    return r;
}

double half_liberation_residual(const BlockMatrix &t) {
    Index k = t.blockRows;
    std::vector<CMatrix> e;
    for (Index i = 0; i < k; i++) {
        for (Index j = 0; j < k; j++) {
            e.push_back(t.block(i, j));
        }
    }
    double res = 0.0;
    for (const auto &a : e) {
        for (const auto &b : e) {
            CMatrix bs = b.adjoint();
            for (const auto &c : e) {
                res = std::max(res, scaled_residual(a * bs * c - c * bs * a));
            }
        }
    }
    return res;
}

double projective_commutativity_residual(const BlockMatrix &t) {
    Index k = t.blockRows;
    std::vector<CMatrix> e;
    for (Index i = 0; i < k; i++) {
        for (Index j = 0; j < k; j++) {
            e.push_back(t.block(i, j));
        }
    }
    std::vector<CMatrix> prods;
    for (const auto &a : e) {
        for (const auto &b : e) {
            prods.push_back(a.adjoint() * b);
        }
    }
    double res = 0.0;
    for (size_t i = 0; i < prods.size(); i++) {
        for (size_t j = i + 1; j < prods.size(); j++) {
            res = std::max(res, scaled_residual(commutator(prods[i], prods[j])));
        }
    }
    return res;
}

Report check_half_liberation(const RepresentedGenerators &g, double tol) {
    g.validate_shapes();
    double hl = 0.0;
    double pc = 0.0;
    for (const auto &t : g.T) {
        hl = std::max(hl, half_liberation_residual(t));
        pc = std::max(pc, projective_commutativity_residual(t));
    }
    Report r;
    r.add("half_liberation", hl, tol);
    r.add("projective_commutativity", pc, tol);
    return r;
}

namespace {

RepresentedGenerators scalar_point(Index n, const std::vector<cplx> &x, const std::vector<CMatrix> &t,
                                   const CMatrix &v) {
    RepresentedGenerators g;
    g.n = n;
    g.d = 1;
    for (cplx c : x) {
        g.x.push_back(CMatrix::Constant(1, 1, c));
    }
    for (const auto &m : t) {
        g.T.push_back(BlockMatrix(3, 3, 1, m));
    }
    g.V = BlockMatrix(n, n, 1, v);
    return g;
}

}  // namespace

RepresentedGenerators make_identity_point(Index n) {
    return scalar_point(n, std::vector<cplx>(n + 1, 1.0), std::vector<CMatrix>(n, identity(3)), identity(n));
}

RepresentedGenerators make_classical_point(Index n, const std::vector<cplx> &x, const std::vector<CMatrix> &g,
                                           const CMatrix &v0) {
    if (Index(x.size()) != n + 1 || Index(g.size()) != n) {
        throw ShapeError("make_classical_point: expected " + std::to_string(n + 1) + " phases and " +
                         std::to_string(n) + " U(3) matrices");
    }
    for (cplx c : x) {
        if (std::abs(std::abs(c) - 1.0) > 1e-12) {
            throw ContractError("make_classical_point: |x_k| != 1");
        }
    }
    for (const auto &m : g) {
        require_shape(m, 3, 3, "make_classical_point g");
        if (!is_unitary(m, 1e-12)) {
            throw ContractError("make_classical_point: g_m not unitary");
        }
    }
    require_shape(v0, n, n, "make_classical_point V0");
    if (!is_unitary(v0, 1e-12)) {
        throw ContractError("make_classical_point: V0 not unitary");
    }
    return scalar_point(n, x, g, v0);
}

RepresentedGenerators make_gauge_point(cplx z, const CMatrix &t, Index n) {
    std::vector<cplx> x(n + 1, std::pow(std::conj(z), 3));
    x[0] = std::pow(z, 3);
    return scalar_point(n, x, std::vector<CMatrix>(n, CMatrix(z * z * t)), identity(n));
}

RepresentedGenerators make_baryon_point(cplx y, Index n) {
    return scalar_point(n, std::vector<cplx>(n + 1, 1.0), std::vector<CMatrix>(n, CMatrix(y * identity(3))),
                        identity(n));
}

BlockMatrix antidiagonal_biunitary(const CMatrix &g, const CMatrix &h) {
    Index k = g.rows();
    BlockMatrix t(k, k, 2);
    for (Index i = 0; i < k; i++) {
        for (Index j = 0; j < k; j++) {
            t.block(i, j)(0, 1) = g(i, j);
            t.block(i, j)(1, 0) = h(i, j);
        }
    }
    return t;
}

RepresentedGenerators make_antidiagonal_point(Index n, const CMatrix &g, const CMatrix &h, const CMatrix &w) {
    require_shape(g, 3, 3, "make_antidiagonal_point g");
    require_shape(h, 3, 3, "make_antidiagonal_point h");
    require_shape(w, 2, 2, "make_antidiagonal_point w");
    RepresentedGenerators out;
    out.n = n;
    out.d = 2;
    out.x.push_back(w);
    for (Index k = 0; k < n; k++) {
        out.x.push_back(w.adjoint());
    }
    out.T.assign(n, antidiagonal_biunitary(g, h));
    out.V = BlockMatrix::scalar(identity(n), 2);
    return out;
}

BlockMatrix free_biunitary(Rng &rng, Index d) {
    CMatrix g = haar_unitary(rng, 3);
    CMatrix h = haar_unitary(rng, 3);
    CMatrix w = CMatrix::Zero(3 * d, 3 * d);
    for (Index i = 0; i < 3; i++) {
        w.block(i * d, i * d, d, d) = haar_unitary(rng, d);
    }
    return BlockMatrix(3, 3, d, kron(g, identity(d)) * w * kron(h, identity(d)));
}

RepresentedGenerators make_free_point(Rng &rng, Index n, Index d) {
    RepresentedGenerators out;
    out.n = n;
    out.d = d;
    for (Index k = 0; k <= n; k++) {
        out.x.push_back(haar_unitary(rng, d));
    }
    out.T.assign(n, free_biunitary(rng, d));
    out.V = BlockMatrix::scalar(identity(n), d);
    return out;
}

RepresentedGenerators random_classical_point(Rng &rng, Index n) {
    cplx z = rng.phase();
    std::vector<cplx> x(n + 1, z);
    x[0] = std::conj(z);
    return make_classical_point(n, x, std::vector<CMatrix>(n, haar_unitary(rng, 3)), identity(n));
}

RepresentedGenerators make_ckm_violating_point(Rng &rng, Index n) {
    std::vector<CMatrix> g;
    for (Index m = 0; m < n; m++) {
        g.push_back(haar_unitary(rng, 3));
    }
    return make_classical_point(n, std::vector<cplx>(n + 1, 1.0), g, identity(n));
}

namespace {

CMatrix dsum(const CMatrix &a, const CMatrix &b) {
    CMatrix out = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

BlockMatrix block_dsum(const BlockMatrix &a, const BlockMatrix &b) {
    BlockMatrix out(a.blockRows, a.blockCols, a.blockDim + b.blockDim);
    for (Index i = 0; i < a.blockRows; i++) {
        for (Index j = 0; j < a.blockCols; j++) {
            out.block(i, j) = dsum(a.block(i, j), b.block(i, j));
        }
    }
    return out;
}

// Entries (i,j) -> sum_l a_il (x) b_lj.
BlockMatrix block_convolve(const BlockMatrix &a, const BlockMatrix &b) {
    BlockMatrix out(a.blockRows, b.blockCols, a.blockDim * b.blockDim);
    for (Index i = 0; i < a.blockRows; i++) {
        for (Index j = 0; j < b.blockCols; j++) {
            for (Index l = 0; l < a.blockCols; l++) {
                out.block(i, j) += kron(a.block(i, l), b.block(l, j));
            }
        }
    }
    return out;
}

void require_same_n(const RepresentedGenerators &g1, const RepresentedGenerators &g2, const char *what) {
    g1.validate_shapes();
    g2.validate_shapes();
    if (g1.n != g2.n) {
        throw ShapeError(std::string(what) + ": generation counts differ (" + std::to_string(g1.n) + " vs " +
                         std::to_string(g2.n) + ")");
    }
}

}  // namespace

RepresentedGenerators direct_sum(const RepresentedGenerators &g1, const RepresentedGenerators &g2) {
    require_same_n(g1, g2, "direct_sum");
    RepresentedGenerators out;
    out.n = g1.n;
    out.d = g1.d + g2.d;
    for (size_t k = 0; k < g1.x.size(); k++) {
        out.x.push_back(dsum(g1.x[k], g2.x[k]));
    }
    for (size_t m = 0; m < g1.T.size(); m++) {
        out.T.push_back(block_dsum(g1.T[m], g2.T[m]));
    }
    out.V = block_dsum(g1.V, g2.V);
    return out;
}

RepresentedGenerators convolve(const RepresentedGenerators &g1, const RepresentedGenerators &g2) {
    require_same_n(g1, g2, "convolve");
    RepresentedGenerators out;
    out.n = g1.n;
    out.d = g1.d * g2.d;
    for (size_t k = 0; k < g1.x.size(); k++) {
        out.x.push_back(kron(g1.x[k], g2.x[k]));
    }
    for (size_t m = 0; m < g1.T.size(); m++) {
        out.T.push_back(block_convolve(g1.T[m], g2.T[m]));
    }
    out.V = block_convolve(g1.V, g2.V);
    return out;
}

}  // namespace ncqiso
