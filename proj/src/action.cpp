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

#include "ncqiso/action.hpp"

#include <algorithm>
#include <cmath>

namespace ncqiso {

namespace {

// Per-block adjoint of a matrix viewed as a grid of d x d blocks.
CMatrix grid_bar(const CMatrix &m, Index d) {
    CMatrix out(m.cols(), m.rows());
    for (Index i = 0; i < m.rows() / d; i++) {
        for (Index j = 0; j < m.cols() / d; j++) {
            out.block(i * d, j * d, d, d) = m.block(i * d, j * d, d, d).adjoint();
        }
    }
    return out;
}

// Column family of d x d blocks Phi_h -> (J (x) *) Phi with blocks sum_h J_{h'h} Phi_h*.
CMatrix jstar(const SMatrix &jd, const CMatrix &phi, Index d) {
    CMatrix bar(phi.rows(), d);
    for (Index h = 0; h < phi.rows() / d; h++) {
        bar.block(h * d, 0, d, d) = phi.block(h * d, 0, d, d).adjoint();
    }
    return jd * bar;
}

double invariance_scale(double tol) { return tol / kDefaultTol; }

// Matrix of Phi -> L Phi + sign (J (x) *) At (J (x) *) Phi on H (x) K (x) Kbar, with Phi an
// N d x d matrix stored row-major. The twist right-multiplies block h' by Z_{h h'}.
CMatrix module_operator(const CMatrix &L, const CMatrix &At, const CMatrix &jd, Index N, Index d, double sign) {
    Index dq = d * d;
    CMatrix out = kron(L, identity(d));
    SMatrix js = sparse_of(jd);
    CMatrix z = js * grid_bar(At * js, d);
    CMatrix id = identity(d);
    for (Index a = 0; a < N; a++) {
        for (Index b = 0; b < N; b++) {
            auto zb = z.block(a * d, b * d, d, d);
            if (zb.isZero(0.0)) {
                continue;
            }
            out.block(a * dq, b * dq, dq, dq) += sign * kron(id, CMatrix(zb.transpose()));
        }
    }
    return out;
}

}  // namespace

AlgebraElement random_algebra_element(Rng &rng, const BlockAlgebra &alg) {
    AlgebraElement a;
    for (Index k : alg.summandDims) {
        a.push_back(random_gaussian(rng, k, k));
    }
    return a;
}

OneForm generate_one_form(const FiniteRealSpectralTriple &F,
                          const std::vector<std::pair<AlgebraElement, AlgebraElement>> &pairs, bool symmetrize) {
    SMatrix ds = sparse_of(F.D);
    SMatrix acc(F.dimH, F.dimH);
    for (const auto &[x, y] : pairs) {
        SMatrix ex = sparse_of(F.algebra.embed(x));
        SMatrix ey = sparse_of(F.algebra.embed(y));
        SMatrix comm = SMatrix(ds * ey) - SMatrix(ey * ds);
        acc += SMatrix(ex * comm);
    }
    CMatrix a = CMatrix(acc);
    OneForm out;
    if (symmetrize) {
        out.A = (a + a.adjoint()) / 2.0;
        out.selfAdjoint = true;
    } else {
        out.A = a;
        out.selfAdjoint = (a - a.adjoint()).norm() <= kDefaultTol * std::max(1.0, a.norm());
    }
    return out;
}

OneForm random_one_form(Rng &rng, const FiniteRealSpectralTriple &F, int terms) {
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
    for (int i = 0; i < terms; i++) {
        AlgebraElement a = random_algebra_element(rng, F.algebra);
        AlgebraElement b = random_algebra_element(rng, F.algebra);
        pairs.emplace_back(std::move(a), std::move(b));
    }
    return generate_one_form(F, pairs, true);
}

CMatrix fluctuate(const FiniteRealSpectralTriple &F, const OneForm &A, double tol) {
    require_shape(A.A, F.dimH, F.dimH, "fluctuate A");
    double dev = (A.A - A.A.adjoint()).norm();
    if (dev > tol * std::max(1.0, A.A.norm())) {
        throw ContractError("fluctuate: one-form is not self-adjoint (||A - A*|| = " + std::to_string(dev) + ")");
    }
    return F.D + A.A + double(F.signs.epsPrime) * F.J.conjugate_op(A.A);
}

void CutoffFunction::validate() const {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw ContractError("cutoff: scale must be positive");
    }
    if (kind == Kind::Table) {
        if (tableX.empty() || tableX.size() != tableY.size()) {
            throw ContractError("cutoff: table needs matching non-empty abscissae and values");
        }
        for (size_t i = 1; i < tableX.size(); i++) {
            if (!(tableX[i] > tableX[i - 1])) {
                throw ContractError("cutoff: table abscissae must increase");
            }
        }
    }
}

double CutoffFunction::operator()(double x) const {
    switch (kind) {
    case Kind::Gaussian:
        return std::exp(-x * x);
    case Kind::EvenPolynomial: {
        double x2 = x * x;
        double acc = 0.0;
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
            acc = acc * x2 + *it;
        }
        return acc;
    }
    case Kind::Table: {
        double ax = std::abs(x);
        if (ax <= tableX.front()) {
            return tableY.front();
        }
        if (ax >= tableX.back()) {
            return tableY.back();
        }
        auto it = std::upper_bound(tableX.begin(), tableX.end(), ax);
        size_t i = size_t(it - tableX.begin());
        double t = (ax - tableX[i - 1]) / (tableX[i] - tableX[i - 1]);
        return tableY[i - 1] + t * (tableY[i] - tableY[i - 1]);
    }
    }
    return 0.0;
}

CutoffFunction gaussian_cutoff(double scale) {
    CutoffFunction f;
    f.scale = scale;
    return f;
}

double bosonic_action(const CMatrix &DA, const CutoffFunction &f, double tol) {
    f.validate();
    RVector ev = hermitian_eigenvalues(DA, tol);
    double s = 0.0;
    for (Index k = 0; k < ev.size(); k++) {
        s += f(ev(k) / f.scale);
    }
    return s;
}

CMatrix cutoff_operator(const CMatrix &DA, const CutoffFunction &f, double tol) {
    f.validate();
    Eigensystem es = hermitian_eigensystem(DA, tol);
    CVector fv(es.values.size());
    for (Index k = 0; k < es.values.size(); k++) {
        fv(k) = f(es.values(k) / f.scale);
    }
    return es.vectors * fv.asDiagonal() * es.vectors.adjoint();
}

CMatrix positive_projector(const FiniteRealSpectralTriple &F) {
    if (!F.even()) {
        return identity(F.dimH);
    }
    return (identity(F.dimH) + *F.gamma) / 2.0;
}

cplx fermionic_action(const FiniteRealSpectralTriple &F, const OneForm &A, const CVector &psi, FermionVariant variant,
                      double tol) {
    if (psi.size() != F.dimH) {
        throw ShapeError("fermionic_action: psi has length " + std::to_string(psi.size()) + ", expected " +
                         std::to_string(F.dimH));
    }
    CMatrix da = fluctuate(F, A, tol);
    CVector p = positive_projector(F) * psi;
    CVector left = variant == FermionVariant::Plain ? p : F.J.apply(p);
    return left.dot(da * p);
}

CMatrix lift_corepresentation(const CMatrix &U, Index left_dim) { return kron(identity(left_dim), U); }

ActionReport extended_actions_invariance(const CMatrix &U, Index d, const FiniteRealSpectralTriple &F,
                                         const OneForm &A, const CVector &psi, const CutoffFunction &f, double tol,
                                         ActionParts parts) {
    Index N = F.dimH;
    Index Nd = N * d;
    require_shape(U, Nd, Nd, "extended_actions_invariance U");
    if (psi.size() != N) {
        throw ShapeError("extended_actions_invariance: psi has length " + std::to_string(psi.size()) +
                         ", expected " + std::to_string(N));
    }
    f.validate();
    CMatrix id = identity(d);
    CMatrix dd = kron(F.D, id);
    CMatrix gd = kron(F.grading(), id);
    CMatrix jd = kron(F.J.matrixPart, id);

    SMatrix us = sparse_of(U);
    SMatrix ds = sparse_of(dd);
    SMatrix gs = sparse_of(gd);
    SMatrix js = sparse_of(jd);
    SMatrix usAdj = us.adjoint();
    Report pre;
    double gate = std::max(tol, 1e-8);
    pre.add("U_unitary", scaled_residual(CMatrix(us * usAdj) - identity(Nd)), gate);
    pre.add("commutes_D", scaled_residual(CMatrix(us * ds - ds * us), rms_norm(F.D)), gate);
    pre.add("commutes_gamma", scaled_residual(CMatrix(us * gs - gs * us)), gate);
    pre.add("J_compatible", scaled_residual(CMatrix(js * sparse_of(grid_bar(U, d)) - us * js)), gate);
    if (!pre.pass()) {
        std::string msg = "extended_actions_invariance: corepresentation fails its conditions:";
        for (const auto &c : pre.checks) {
            if (!c.pass) {
                msg += " " + c.name + "=" + std::to_string(c.residual);
            }
        }
        throw ContractError(msg);
    }

    ActionReport r;
    double scale = invariance_scale(tol);
    double ep = F.signs.epsPrime;
    double e = F.signs.eps;
    CMatrix DA = fluctuate(F, A, tol);

    SMatrix ak = sparse_of(kron(A.A, id));
    CMatrix At = CMatrix(us * ak * usAdj);
    if (d == 1) {
        CMatrix lhs = F.D + At + ep * F.J.conjugate_op(At);
        r.add("gauge_covariance_operator", scaled_residual(lhs - CMatrix(us * sparse_of(DA) * usAdj), rms_norm(DA)),
              1e-10 * scale);
    }

    // Bosonic, on H (x) K (x) Kbar: left action of At, twist by right multiplication.
    if (parts != ActionParts::Fermionic) {
        CMatrix dm = module_operator(dd + At, At, jd, N, d, ep * e);
        auto fscaled = [&](double x) { return f(x / f.scale); };
        SpectralFunction sfA = hermitian_function(DA, fscaled, tol);
        SpectralFunction sfM = hermitian_function(dm, fscaled, tol);
        r.Sb = 0.0;
        for (Index k = 0; k < sfA.spectrum.size(); k++) {
            r.Sb += f(sfA.spectrum(k) / f.scale);
            r.spectrum.push_back(sfA.spectrum(k));
        }
        Index dq = d * d;
        CMatrix Sbt = partial_trace_left(sfM.value, N, dq);
        r.add("bosonic_invariance", (Sbt - r.Sb * identity(dq)).norm() / (1.0 + std::abs(r.Sb)), 1e-8 * scale);

        double spec = 0.0;
        double span = std::max(1.0, sfA.spectrum.cwiseAbs().maxCoeff());
        for (Index k = 0; k < N * dq; k++) {
            spec = std::max(spec, std::abs(sfA.spectrum(k / dq) - sfM.spectrum(k)));
        }
        r.add("spectrum_match", spec / span, 1e-9 * scale);
    } else {
        r.Sb = bosonic_action(DA, f, tol);
    }

    r.note("Sb", r.Sb);
    if (parts == ActionParts::Bosonic) {
        return r;
    }

    // Fermionic, on Q-valued vectors.
    auto act = [&](const CMatrix &phi) -> CMatrix {
        return ds * phi + At * phi + (ep * e) * jstar(js, At * jstar(js, phi, d), d);
    };
    auto lift = [&](const CVector &v) -> CMatrix { return us * kron(CMatrix(v), id); };

    double cov = 0.0;
    CVector jpsi = F.J.apply(psi);
    for (const CVector &xi : {CVector(psi), CVector(DA * psi), jpsi}) {
        double nx = std::max(xi.norm(), 1e-300);
        CMatrix lhs = act(lift(xi));
        CMatrix rhs = lift(DA * xi);
        cov = std::max(cov, (lhs - rhs).norm() / (std::sqrt(double(d)) * nx * std::max(1.0, rms_norm(DA))));
    }
    r.add("gauge_covariance_module", cov, 1e-10 * scale);

    CVector p = positive_projector(F) * psi;
    CMatrix phi = lift(p);
    CMatrix dphi = act(phi);
    r.SfPlain = p.dot(DA * p);
    r.SfReal = F.J.apply(p).dot(DA * p);
    CMatrix sfp = phi.adjoint() * dphi;
    CMatrix sfr = jstar(js, phi, d).adjoint() * dphi;
    r.add("fermionic_invariance_plain", (sfp - r.SfPlain * id).norm() / (1.0 + std::abs(r.SfPlain)), 1e-9 * scale);
    r.add("fermionic_invariance_real", (sfr - r.SfReal * id).norm() / (1.0 + std::abs(r.SfReal)), 1e-9 * scale);

    // Plain pairing on the whole of H, where it does not vanish for parity reasons.
    CMatrix phiFull = lift(psi);
    cplx sfFull = psi.dot(DA * psi);
    CMatrix sff = phiFull.adjoint() * act(phiFull);
    r.add("fermionic_invariance_plain_full_H", (sff - sfFull * id).norm() / (1.0 + std::abs(sfFull)), 1e-9 * scale);

    r.note("Sf_plain_re", r.SfPlain.real());
    r.note("Sf_plain_im", r.SfPlain.imag());
    r.note("Sf_real_re", r.SfReal.real());
    r.note("Sf_real_im", r.SfReal.imag());
    return r;
}

ActionReport extended_actions_invariance(const Corepresentation &c, const FiniteRealSpectralTriple &F,
                                         const OneForm &A, const CVector &psi, const CutoffFunction &f, double tol,
                                         ActionParts parts) {
    Index base = c.U.rows() / c.d;
    if (base == 0 || F.dimH % base != 0) {
        throw ShapeError("extended_actions_invariance: triple dimension " + std::to_string(F.dimH) +
                         " is not a multiple of the corepresentation dimension " + std::to_string(base));
    }
    Index left = F.dimH / base;
    CMatrix U = left == 1 ? c.U : lift_corepresentation(c.U, left);
    return extended_actions_invariance(U, c.d, F, A, psi, f, tol, parts);
}

double trace_identity_residual(const BlockMatrix &B, const CMatrix &L) {
    if (B.blockRows != B.blockCols) {
        throw ShapeError("trace_identity: B must be a square block grid, got " +
                         shape_str(B.blockRows, B.blockCols));
    }
    Index k = B.blockRows;
    Index d = B.blockDim;
    require_shape(L, k, k, "trace_identity L");
    CMatrix m = B.data * kron(L, identity(d)) * B.data.adjoint();
    CMatrix t = partial_trace_left(m, k, d);
    return (t - L.trace() * identity(d)).norm();
}

Report trace_identity_check(const BlockMatrix &B, const CMatrix &L, double tol) {
    Report r;
    r.add("trace_identity", trace_identity_residual(B, L), tol * std::max(1.0, L.norm()));
    return r;
}

Report trace_identity_all_units(const BlockMatrix &B, double tol) {
    Index k = B.blockRows;
    double worst = 0.0;
    for (Index i = 0; i < k; i++) {
        for (Index j = 0; j < k; j++) {
            worst = std::max(worst, trace_identity_residual(B, unit(k, i, j)));
        }
    }
    Report r;
    r.add("all_units", worst, tol * std::sqrt(double(B.data.rows())));
    return r;
}

}  // namespace ncqiso
