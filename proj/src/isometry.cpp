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

#include "ncqiso/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ncqiso {

namespace {

// First flat index of the generation block (isospin i1, color i2, slot i3).
Index hrow(Index i1, Index i2, Index i3, Index n) { return ((i1 * 4 + i2) * 4 + i3) * n; }

BlockMatrix diag_blocks(const std::vector<CMatrix> &b) { return block_diag(b); }

// Per-block adjoint of a matrix viewed as a grid of d x d blocks.
CMatrix grid_bar(const CMatrix &m, Index d) {
    Index k = m.rows() / d;
    return block_bar(BlockMatrix(k, k, d, m)).data;
}

struct Entry {
    Index r, c;
    cplx v;
};

std::vector<Entry> nonzeros(const CMatrix &m) {
    std::vector<Entry> out;
    for (Index r = 0; r < m.rows(); r++) {
        for (Index c = 0; c < m.cols(); c++) {
            if (m(r, c) != cplx(0)) {
                out.push_back({r, c, m(r, c)});
            }
        }
    }
    return out;
}

struct Expansion {
    std::vector<CMatrix> coef;
    double residual = 0.0;
};

// Orthogonal projection of X on span{E_b} (x) B(K). The E_b have disjoint supports.
Expansion expand(const CMatrix &x, const std::vector<std::vector<Entry>> &nz, Index d) {
    Expansion e;
    CMatrix proj = CMatrix::Zero(x.rows(), x.cols());
    for (const auto &list : nz) {
        CMatrix c = CMatrix::Zero(d, d);
        double w = 0.0;
        for (const auto &en : list) {
            c += std::conj(en.v) * x.block(en.r * d, en.c * d, d, d);
            w += std::norm(en.v);
        }
        c /= w;
        for (const auto &en : list) {
            proj.block(en.r * d, en.c * d, d, d) += en.v * c;
        }
        e.coef.push_back(c);
    }
    e.residual = scaled_residual(x - proj);
    return e;
}

std::vector<std::vector<Entry>> algebra_nonzeros(const FiniteRealSpectralTriple &F) {
    std::vector<std::vector<Entry>> nz;
    for (const auto &img : F.algebra.images) {
        nz.push_back(nonzeros(img));
    }
    return nz;
}

CMatrix adjoint_action(const CMatrix &u, const CMatrix &a, Index d) {
    return u * kron(a, identity(d)) * u.adjoint();
}

}  // namespace

Corepresentation assemble_U(const RepresentedGenerators &g) {
    g.validate_shapes();
    Index n = g.n;
    Index d = g.d;
    Index N = 32 * n;
    Corepresentation c;
    c.n = n;
    c.d = d;
    c.generators = g;
    c.U = CMatrix::Zero(N * d, N * d);
    auto put = [&](Index i1, Index i2, Index i3, Index j2, const CMatrix &m) {
        c.U.block(hrow(i1, i2, i3, n) * d, hrow(i1, j2, i3, n) * d, n * d, n * d) = m;
    };
    const CMatrix &x0 = g.x0();
    std::vector<CMatrix> x0xk, xkx0, xk, xks;
    for (Index k = 1; k <= n; k++) {
        x0xk.push_back(x0 * g.x[k]);
        xkx0.push_back(g.x[k].adjoint() * x0.adjoint());
        xk.push_back(g.x[k]);
        xks.push_back(g.x[k].adjoint());
    }
    // Neutrinos.
    put(0, 0, 0, 0, diag_blocks(x0xk).data);
    put(0, 0, 1, 0, g.V.data);
    put(0, 0, 2, 0, diag_blocks(xkx0).data);
    put(0, 0, 3, 0, block_bar(g.V).data);
    // Electrons.
    for (Index s = 0; s < 4; s++) {
        bool particle = s == 0 || s == 3;
        put(1, 0, s, 0, diag_blocks(particle ? xk : xks).data);
    }
    // Quarks: color j -> k mixes through (T_m)_jk in generation m.
    for (Index j = 0; j < 3; j++) {
        for (Index k = 0; k < 3; k++) {
            std::vector<CMatrix> up, dn, upb, dnb;
            for (Index m = 0; m < n; m++) {
                CMatrix t = g.T[m].block(j, k);
                up.push_back(t);
                dn.push_back(x0.adjoint() * t);
                upb.push_back(t.adjoint());
                dnb.push_back(t.adjoint() * x0);
            }
            for (Index s = 0; s < 4; s++) {
                bool particle = s == 0 || s == 3;
                put(0, 1 + j, s, 1 + k, diag_blocks(particle ? up : upb).data);
                put(1, 1 + j, s, 1 + k, diag_blocks(particle ? dn : dnb).data);
            }
        }
    }
    return c;
}

Report verify_corep_conditions(const Corepresentation &c, const FiniteRealSpectralTriple &F, double tol) {
    Index d = c.d;
    Index N = F.dimH;
    require_shape(c.U, N * d, N * d, "verify_corep_conditions U");
    Report r;
    CMatrix id = identity(d);
    CMatrix dd = kron(F.D, id);
    CMatrix gg = kron(F.grading(), id);
    CMatrix jj = kron(F.J.matrixPart, id);
    r.add("U_unitary", unitarity_residual(c.U) / std::sqrt(double(N * d)), tol);
    r.add("commutes_D", scaled_residual(c.U * dd - dd * c.U, rms_norm(F.D)), tol);
    r.add("commutes_gamma", scaled_residual(c.U * gg - gg * c.U), tol);
    r.add("J_compatible", scaled_residual(jj * grid_bar(c.U, d) - c.U * jj), tol);

    auto nz = algebra_nonzeros(F);
    double cont = 0.0;
    double cont3 = 0.0;
    Index m3_start = F.algebra.summandDims.size() == 4 ? F.algebra.offset(3) : F.algebra.size();
    for (Index a = 0; a < F.algebra.size(); a++) {
        Expansion e = expand(adjoint_action(c.U, F.algebra.images[a], d), nz, d);
        cont = std::max(cont, e.residual);
        if (a >= m3_start) {
            cont3 = std::max(cont3, e.residual);
        }
    }
    r.add("containment", cont, tol);
    r.add("containment_M3", cont3, tol);
    return r;
}

CoactionCoefficients adjoint_coaction_coefficients(const Corepresentation &c, const FiniteRealSpectralTriple &F,
                                                   double tol) {
    Index d = c.d;
    require_shape(c.U, F.dimH * d, F.dimH * d, "adjoint_coaction_coefficients U");
    auto nz = algebra_nonzeros(F);
    CoactionCoefficients out;
    for (Index a = 0; a < F.algebra.size(); a++) {
        Expansion e = expand(adjoint_action(c.U, F.algebra.images[a], d), nz, d);
        out.residual = std::max(out.residual, e.residual);
        out.coef.push_back(std::move(e.coef));
    }
    if (out.residual > tol) {
        throw ContainmentError("adjoint_coaction_coefficients: expansion residual " + std::to_string(out.residual) +
                               " exceeds tolerance");
    }
    return out;
}

Report coaction_formula_check(const Corepresentation &c, const FiniteRealSpectralTriple &F, double tol) {
    CoactionCoefficients cc = adjoint_coaction_coefficients(c, F, tol);
    const auto &g = c.generators;
    Index d = c.d;
    CMatrix id = identity(d);
    CMatrix zero = CMatrix::Zero(d, d);
    const BlockAlgebra &alg = F.algebra;
    auto expected_dev = [&](Index a, auto &&expected) {
        double dev = 0.0;
        for (Index b = 0; b < alg.size(); b++) {
            dev = std::max(dev, scaled_residual(cc.coef[a][b] - expected(b)));
        }
        return dev;
    };
    auto coinvariant = [&](Index a) { return expected_dev(a, [&](Index b) { return b == a ? id : zero; }); };

    double triv = std::max(coinvariant(alg.index(0, 0, 0)), coinvariant(alg.index(1, 0, 0)));
    Report r;
    r.add("coinvariant_C_summands", triv, tol);
    r.add("coinvariant_M2_diagonal", std::max(coinvariant(alg.index(2, 0, 0)), coinvariant(alg.index(2, 1, 1))), tol);
    Index e12 = alg.index(2, 0, 1);
    Index e21 = alg.index(2, 1, 0);
    r.add("M2_e12_x0", expected_dev(e12, [&](Index b) { return b == e12 ? g.x0() : zero; }), tol);
    r.add("M2_e21_x0star", expected_dev(e21, [&](Index b) { return b == e21 ? CMatrix(g.x0().adjoint()) : zero; }),
          tol);
    double m3 = 0.0;
    const BlockMatrix &t1 = g.T[0];
    for (Index i = 0; i < 3; i++) {
        for (Index j = 0; j < 3; j++) {
            Index a = alg.index(3, i, j);
            m3 = std::max(m3, expected_dev(a, [&](Index b) -> CMatrix {
                              if (b < alg.offset(3)) {
                                  return zero;
                              }
                              Index k = (b - alg.offset(3)) / 3;
                              Index l = (b - alg.offset(3)) % 3;
                              return t1.block(k, i).adjoint() * t1.block(l, j);
                          }));
        }
    }
    r.add("M3_TstarT", m3, tol);
    return r;
}

Report transformation_laws_check(const Corepresentation &c, double tol) {
    const auto &g = c.generators;
    Index n = c.n;
    Index d = c.d;
    Index N = 32 * n;
    double worst = 0.0;
    for (Index h = 0; h < N; h++) {
        SMBasisLabel l = label_basis(h, n);
        Index k = l.generation - 1;
        bool particle = l.chirality == Chirality::PL || l.chirality == Chirality::PR;
        bool up = l.isospin == Isospin::Up;
        CMatrix expected = CMatrix::Zero(N * d, d);
        auto add = [&](const SMBasisLabel &target, const CMatrix &b) {
            expected.block(basis_index(target, n) * d, 0, d, d) += b;
        };
        const CMatrix &x0 = g.x0();
        const CMatrix &xk = g.x[k + 1];
        if (l.color == ColorSector::Lepton) {
            if (!up) {
                add(l, particle ? xk : CMatrix(xk.adjoint()));
            } else if (l.chirality == Chirality::PL) {
                add(l, x0 * xk);
            } else if (l.chirality == Chirality::PbarL) {
                add(l, xk.adjoint() * x0.adjoint());
            } else {
                // nubar_R,k -> sum_j nubar_R,j (x) V_jk;  nu_R,k -> sum_j nu_R,j (x) V_jk*.
                for (Index j = 0; j < n; j++) {
                    SMBasisLabel t = l;
                    t.generation = j + 1;
                    CMatrix v = g.V.block(j, k);
                    add(t, l.chirality == Chirality::PbarR ? v : CMatrix(v.adjoint()));
                }
            }
        } else {
            Index cc = Index(l.color) - 1;
            for (Index cp = 0; cp < 3; cp++) {
                SMBasisLabel t = l;
                t.color = ColorSector(cp + 1);
                CMatrix tm = g.T[k].block(cp, cc);
                CMatrix b;
                if (up) {
                    b = particle ? tm : CMatrix(tm.adjoint());
                } else {
                    b = particle ? CMatrix(x0.adjoint() * tm) : CMatrix(tm.adjoint() * x0);
                }
                add(t, b);
            }
        }
        worst = std::max(worst, scaled_residual(c.U.block(0, h * d, N * d, d) - expected));
    }
    Report r;
    r.add("transformation_laws", worst, tol);
    return r;
}

CMatrix compose_corepresentations(const CMatrix &u1, Index d1, const CMatrix &u2, Index d2) {
    Index N = u1.rows() / d1;
    require_shape(u2, N * d2, N * d2, "compose_corepresentations u2");
    CMatrix u12 = kron(u1, identity(d2));
    CMatrix u13 = CMatrix::Zero(N * d1 * d2, N * d1 * d2);
    CMatrix id1 = identity(d1);
    for (Index h = 0; h < N; h++) {
        for (Index hp = 0; hp < N; hp++) {
            CMatrix b = u2.block(h * d2, hp * d2, d2, d2);
            if (b.isZero(0.0)) {
                continue;
            }
            u13.block(h * d1 * d2, hp * d1 * d2, d1 * d2, d1 * d2) = kron(id1, b);
        }
    }
    return u12 * u13;
}

namespace {

struct Term {
    Index unk;
    cplx coef;
    bool conj;
};

struct UnionFind {
    std::vector<Index> parent;
    explicit UnionFind(Index n) : parent(n) { std::iota(parent.begin(), parent.end(), Index(0)); }
    Index find(Index a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(Index a, Index b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
};

struct Sparse {
    std::vector<std::vector<std::pair<Index, cplx>>> rows, cols;
    explicit Sparse(const CMatrix &m) : rows(m.rows()), cols(m.cols()) {
        for (Index r = 0; r < m.rows(); r++) {
            for (Index c = 0; c < m.cols(); c++) {
                if (m(r, c) != cplx(0)) {
                    rows[r].push_back({c, m(r, c)});
                    cols[c].push_back({r, m(r, c)});
                }
            }
        }
    }
};

}  // namespace

CommutantReport classical_commutant_basis(const FiniteRealSpectralTriple &F, double tol) {
    Index N = F.dimH;
    CMatrix gamma = F.grading();
    const CMatrix &jm = F.J.matrixPart;
    Sparse sd(F.D), sg(gamma), sj(jm);

    std::vector<std::vector<Term>> eqs;
    auto commutator_eq = [&](const Sparse &m, Index a, Index b) {
        // [X, M]_ab = sum_c X_ac M_cb - M_ac X_cb
        std::vector<Term> t;
        for (auto [c, v] : m.cols[b]) {
            t.push_back({a * N + c, v, false});
        }
        for (auto [c, v] : m.rows[a]) {
            t.push_back({c * N + b, -v, false});
        }
        return t;
    };
    for (Index a = 0; a < N; a++) {
        for (Index b = 0; b < N; b++) {
            eqs.push_back(commutator_eq(sd, a, b));
            eqs.push_back(commutator_eq(sg, a, b));
            // (J conj(X) - X J)_ab
            std::vector<Term> t;
            for (auto [c, v] : sj.rows[a]) {
                t.push_back({c * N + b, v, true});
            }
            for (auto [c, v] : sj.cols[b]) {
                t.push_back({a * N + c, -v, false});
            }
            eqs.push_back(std::move(t));
        }
    }

    UnionFind uf(N * N);
    for (const auto &e : eqs) {
        for (size_t i = 1; i < e.size(); i++) {
            uf.unite(e[0].unk, e[i].unk);
        }
    }
    std::vector<std::vector<Index>> comp_unknowns(N * N), comp_eqs(N * N);
    for (Index u = 0; u < N * N; u++) {
        comp_unknowns[uf.find(u)].push_back(u);
    }
    for (size_t e = 0; e < eqs.size(); e++) {
        if (!eqs[e].empty()) {
            comp_eqs[uf.find(eqs[e][0].unk)].push_back(Index(e));
        }
    }

    CommutantReport out;
    std::vector<Index> local(N * N, -1);
    for (Index root = 0; root < N * N; root++) {
        const auto &unks = comp_unknowns[root];
        if (unks.empty()) {
            continue;
        }
        out.components++;
        for (size_t i = 0; i < unks.size(); i++) {
            local[unks[i]] = Index(i);
        }
        const auto &es = comp_eqs[root];
        RMatrix A = RMatrix::Zero(2 * Index(es.size()), 2 * Index(unks.size()));
        for (size_t e = 0; e < es.size(); e++) {
            Index re = 2 * Index(e), im = re + 1;
            for (const auto &t : eqs[es[e]]) {
                Index xr = 2 * local[t.unk], xi = xr + 1;
                double ar = t.coef.real(), ai = t.coef.imag();
                if (!t.conj) {
                    A(re, xr) += ar;
                    A(re, xi) -= ai;
                    A(im, xr) += ai;
                    A(im, xi) += ar;
                } else {
                    A(re, xr) += ar;
                    A(re, xi) += ai;
                    A(im, xr) += ai;
                    A(im, xi) -= ar;
                }
            }
        }
        RMatrix ns = nullspace_real(A, tol);
        for (Index v = 0; v < ns.cols(); v++) {
            CMatrix x = CMatrix::Zero(N, N);
            for (size_t i = 0; i < unks.size(); i++) {
                x(unks[i] / N, unks[i] % N) = cplx(ns(2 * Index(i), v), ns(2 * Index(i) + 1, v));
            }
            out.basis.push_back(std::move(x));
        }
    }
    out.realDimension = Index(out.basis.size());

    double rd = 0.0, rg = 0.0, rj = 0.0;
    double dscale = rms_norm(F.D);
    for (const auto &x : out.basis) {
        rd = std::max(rd, scaled_residual(x * F.D - F.D * x, dscale));
        rg = std::max(rg, scaled_residual(x * gamma - gamma * x));
        rj = std::max(rj, scaled_residual(jm * x.conjugate() - x * jm));
    }
    out.residuals.add("commutes_D", rd, tol);
    out.residuals.add("commutes_gamma", rg, tol);
    out.residuals.add("J_compatible", rj, tol);
    out.residuals.note("real_dimension", double(out.realDimension));
    out.residuals.note("components", double(out.components));
    return out;
}

double commutant_span_residual(const CommutantReport &r, const CMatrix &x) {
    CMatrix rest = x;
    for (const auto &b : r.basis) {
        double c = (b.adjoint() * x).trace().real();
        rest -= c * b;
    }
    double nx = x.norm();
    return nx == 0.0 ? rest.norm() : rest.norm() / nx;
}

BlockAnsatz extract_block_ansatz(const Corepresentation &c) {
    BlockAnsatz a;
    Index n = c.n;
    Index d = c.d;
    a.n = n;
    a.d = d;
    auto grab = [&](Index i, Index j0, Index k0, Index j1, Index k1) {
        return BlockMatrix(n, n, d, c.U.block(hrow(i, j0, j1, n) * d, hrow(i, k0, k1, n) * d, n * d, n * d));
    };
    for (Index i = 0; i < 2; i++) {
        for (Index j1 = 0; j1 < 4; j1++) {
            for (Index k1 = 0; k1 < 4; k1++) {
                a.alpha[i][j1][k1] = grab(i, 0, 0, j1, k1);
                for (Index j0 = 0; j0 < 3; j0++) {
                    for (Index k0 = 0; k0 < 3; k0++) {
                        a.beta[i][j0][k0][j1][k1] = grab(i, j0 + 1, k0 + 1, j1, k1);
                    }
                }
            }
        }
    }
    return a;
}

namespace {

double offdiag_norm(const BlockMatrix &b) {
    double s = 0.0;
    for (Index i = 0; i < b.blockRows; i++) {
        for (Index j = 0; j < b.blockCols; j++) {
            if (i != j) {
                s += b.block(i, j).squaredNorm();
            }
        }
    }
    return std::sqrt(s / double(b.data.rows()));
}

double biunitary_dev(const BlockMatrix &b) {
    BiunitaryReport r = is_biunitary(b, 1.0);
    return *std::max_element(r.residuals, r.residuals + 4) / std::sqrt(double(b.data.rows()));
}

}  // namespace

Report structural_reduction_check(const FiniteRealSpectralTriple &F, const YukawaSet &p,
                                  const CommutantReport &report, const Corepresentation &c, double tol) {
    Index n = c.n;
    Index d = c.d;
    Index N = F.dimH;
    require_shape(c.U, N * d, N * d, "structural_reduction_check U");
    Report r;

    std::vector<CMatrix> proj;
    for (int s = 1; s <= 4; s++) {
        proj.push_back(sector_projector(s, n));
    }
    double vi = 0.0;
    for (const auto &x : report.basis) {
        for (const auto &pr : proj) {
            vi = std::max(vi, scaled_residual((identity(N) - pr) * x * pr));
        }
    }
    r.add("commutant_preserves_Vi", vi, tol);

    double uvi = 0.0;
    for (int s = 0; s < 4; s++) {
        CMatrix pk = kron(proj[s], identity(d));
        double dev = scaled_residual((identity(N * d) - pk) * c.U * pk);
        if (dev > 1e-6) {
            throw StructuralError("structural_reduction_check: U leaks out of V_" + std::to_string(s + 1) +
                                  " (residual " + std::to_string(dev) + ")");
        }
        uvi = std::max(uvi, dev);
    }
    r.add("U_preserves_Vi", uvi, tol);

    BlockAnsatz a = extract_block_ansatz(c);
    double off = 0.0;
    for (Index i = 0; i < 2; i++) {
        for (Index j1 = 0; j1 < 4; j1++) {
            for (Index k1 = 0; k1 < 4; k1++) {
                if (j1 == k1) {
                    continue;
                }
                off = std::max(off, rms_norm(a.alpha[i][j1][k1].data));
                for (Index j0 = 0; j0 < 3; j0++) {
                    for (Index k0 = 0; k0 < 3; k0++) {
                        off = std::max(off, rms_norm(a.beta[i][j0][k0][j1][k1].data));
                    }
                }
            }
        }
    }
    r.add("offdiagonal_slot_blocks_zero", off, tol);

    double a2diag = 0.0, b1diag = 0.0;
    for (Index s = 0; s < 4; s++) {
        a2diag = std::max(a2diag, offdiag_norm(a.alpha[1][s][s]));
        for (Index j = 0; j < 3; j++) {
            for (Index k = 0; k < 3; k++) {
                b1diag = std::max(b1diag, offdiag_norm(a.beta[0][j][k][s][s]));
            }
        }
    }
    r.add("alpha2_diagonal", a2diag, tol);
    r.add("beta1_diagonal", b1diag, tol);

    double bar = scaled_residual(a.alpha[1][1][1].data - block_bar(a.alpha[1][0][0]).data);
    for (Index j = 0; j < 3; j++) {
        for (Index k = 0; k < 3; k++) {
            bar = std::max(bar, scaled_residual(a.beta[0][j][k][1][1].data - block_bar(a.beta[0][j][k][0][0]).data));
        }
    }
    r.add("slot2_is_bar_of_slot1", bar, tol);

    CMatrix y = kron(p.upsNu, identity(d));
    CMatrix rr = kron(p.upsR, identity(d));
    const CMatrix &a11 = a.alpha[0][0][0].data;
    CMatrix a22bar = block_bar(a.alpha[0][1][1]).data;
    double ys = rms_norm(y);
    double yint = std::max({scaled_residual(a11 * y - y * a11, ys), scaled_residual(y * a11 - a22bar * y, ys),
                            scaled_residual(a22bar * y - y * a22bar, ys)});
    r.add("alpha1_upsNu_intertwining", yint, tol);
    r.add("alpha1_upsR_intertwining", scaled_residual(a.alpha[0][1][1].data * rr - rr * a22bar, rms_norm(rr)), tol);

    CMatrix cc = kron(ckm_of(p), identity(d));
    double ckm = 0.0;
    for (Index j = 0; j < 3; j++) {
        for (Index k = 0; k < 3; k++) {
            BlockMatrix m(n, n, d, cc.adjoint() * a.beta[1][j][k][0][0].data * cc);
            ckm = std::max(ckm, offdiag_norm(m));
        }
    }
    r.add("ckm_conjugated_beta2_diagonal", ckm, tol);

    // Generators read back from the blocks.
    std::vector<CMatrix> xk;
    for (Index k = 0; k < n; k++) {
        xk.push_back(a.alpha[1][0][0].block(k, k));
    }
    std::vector<BlockMatrix> tm(n, BlockMatrix(3, 3, d));
    std::vector<BlockMatrix> xmm(n, BlockMatrix(3, 3, d));
    for (Index m = 0; m < n; m++) {
        for (Index j = 0; j < 3; j++) {
            for (Index k = 0; k < 3; k++) {
                tm[m].block(j, k) = a.beta[0][j][k][0][0].block(m, m);
                xmm[m].block(j, k) = a.beta[1][j][k][0][0].block(m, m);
            }
        }
    }
    double bi = 0.0;
    for (Index i = 0; i < 2; i++) {
        for (Index s = 0; s < 4; s++) {
            bi = std::max(bi, biunitary_dev(a.alpha[i][s][s]));
        }
    }
    for (Index m = 0; m < n; m++) {
        bi = std::max({bi, biunitary_dev(tm[m]), biunitary_dev(xmm[m])});
    }
    r.add("extracted_biunitarity", bi, tol);

    // alpha1_11 (alpha2_11)* = 1 (x) x_0.
    BlockMatrix prod(n, n, d, a11 * a.alpha[1][0][0].data.adjoint());
    CMatrix x0 = prod.block(0, 0);
    double x0dev = offdiag_norm(prod);
    for (Index k = 0; k < n; k++) {
        x0dev = std::max(x0dev, scaled_residual(prod.block(k, k) - x0));
    }
    x0dev = std::max(x0dev, unitarity_residual(x0) / std::sqrt(double(d)));
    for (Index i = 0; i < 3; i++) {
        for (Index k = 0; k < 3; k++) {
            CMatrix s = CMatrix::Zero(n * d, n * d);
            for (Index j = 0; j < 3; j++) {
                s += a.beta[0][i][j][0][0].data * a.beta[1][k][j][0][0].data.adjoint();
            }
            CMatrix expect = i == k ? kron(identity(n), x0) : CMatrix(CMatrix::Zero(n * d, n * d));
            x0dev = std::max(x0dev, scaled_residual(s - expect));
        }
    }
    r.add("x0_pattern", x0dev, tol);

    std::vector<CMatrix> x0xk, xks;
    for (Index k = 0; k < n; k++) {
        x0xk.push_back(x0 * xk[k]);
        xks.push_back(xk[k].adjoint());
    }
    double pat = std::max(scaled_residual(a11 - block_diag(x0xk).data),
                          scaled_residual(a.alpha[1][1][1].data - block_diag(xks).data));
    for (Index i = 0; i < 3; i++) {
        for (Index j = 0; j < 3; j++) {
            std::vector<CMatrix> e;
            for (Index m = 0; m < n; m++) {
                e.push_back(x0.adjoint() * tm[m].block(i, j));
            }
            pat = std::max(pat, scaled_residual(a.beta[1][i][j][0][0].data - block_diag(e).data));
        }
    }
    r.add("generator_patterns", pat, tol);

    const auto &g = c.generators;
    double match = std::max(scaled_residual(x0 - g.x0()), scaled_residual(a.alpha[0][1][1].data - g.V.data));
    for (Index k = 0; k < n; k++) {
        match = std::max(match, scaled_residual(xk[k] - g.x[k + 1]));
    }
    for (Index m = 0; m < n; m++) {
        match = std::max(match, scaled_residual(tm[m].data - g.T[m].data));
    }
    r.add("matches_generators", match, tol);
    return r;
}

}  // namespace ncqiso
