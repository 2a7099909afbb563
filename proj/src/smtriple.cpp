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

#include "ncqiso/smtriple.hpp"

#include <algorithm>
#include <cmath>

namespace ncqiso {

namespace {

bool is_zero(const CMatrix &m) { return m.norm() == 0.0; }

double offdiag_norm(const CMatrix &m) {
    CMatrix o = m;
    o.diagonal().setZero();
    return o.norm();
}

// Minimum gap between sorted values; +inf for fewer than two.
double min_gap(const RVector &v) {
    double g = INFINITY;
    for (Index i = 1; i < v.size(); i++) {
        g = std::min(g, v(i) - v(i - 1));
    }
    return g;
}

CMatrix dirac_block(const CMatrix &y, const CMatrix &r) {
    Index n = y.rows();
    CMatrix b = CMatrix::Zero(4 * n, 4 * n);
    b.block(0, 3 * n, n, n) = y;
    b.block(n, 2 * n, n, n) = y.transpose();
    b.block(n, 3 * n, n, n) = r;
    b.block(2 * n, n, n, n) = y.conjugate();
    b.block(3 * n, 0, n, n) = y.adjoint();
    b.block(3 * n, n, n, n) = r.adjoint();
    return b;
}

CMatrix diag2(cplx a, cplx b) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

}  // namespace

ValidationReport validate_params(const YukawaSet &p, double tol) {
    Index n = p.n;
    if (n < 1) {
        throw ShapeError("validate_params: n must be >= 1");
    }
    require_shape(p.upsNu, n, n, "upsNu");
    require_shape(p.upsE, n, n, "upsE");
    require_shape(p.upsU, n, n, "upsU");
    require_shape(p.upsD, n, n, "upsD");
    require_shape(p.upsR, n, n, "upsR");
    for (const CMatrix *m : {&p.upsNu, &p.upsE, &p.upsU, &p.upsD, &p.upsR}) {
        require_finite(*m, "Yukawa matrix");
    }

    ValidationReport r;
    r.minimalRegime = is_zero(p.upsNu);
    r.note("minimal_regime", r.minimalRegime ? 1.0 : 0.0);

    struct Named {
        const char *name;
        const CMatrix *m;
    };
    std::vector<std::pair<std::string, RVector>> spectra;
    for (Named x : {Named{"upsE", &p.upsE}, Named{"upsU", &p.upsU}}) {
        double scale = rms_norm(*x.m);
        r.add(std::string(x.name) + "_diagonal", offdiag_norm(*x.m) / std::sqrt(double(n)) / std::max(1.0, scale),
              tol);
        RVector d = x.m->diagonal().real();
        double imag = x.m->diagonal().imag().norm();
        r.add(std::string(x.name) + "_real", imag / std::max(1.0, scale), tol);
        std::sort(d.data(), d.data() + d.size());
        r.add_flag(std::string(x.name) + "_positive", d(0) > tol * std::max(1.0, scale));
        r.add_flag(std::string(x.name) + "_multiplicity_one", min_gap(d) > tol * std::max(1.0, scale));
        spectra.emplace_back(x.name, d);
    }

    double dscale = rms_norm(p.upsD);
    r.add("upsD_hermitian", scaled_residual(p.upsD - p.upsD.adjoint(), dscale), tol);
    RVector ed = hermitian_eigenvalues(p.upsD, 1e300);
    r.add_flag("upsD_positive", ed(0) > tol * std::max(1.0, dscale));
    r.add_flag("upsD_multiplicity_one", min_gap(ed) > tol * std::max(1.0, dscale));
    spectra.emplace_back("upsD", ed);

    double nscale = rms_norm(p.upsNu);
    r.add("upsNu_hermitian", scaled_residual(p.upsNu - p.upsNu.adjoint(), nscale), tol);
    if (!r.minimalRegime) {
        RVector en = hermitian_eigenvalues(p.upsNu, 1e300);
        r.add_flag("upsNu_positive", en(0) > -tol * std::max(1.0, nscale));
        spectra.emplace_back("upsNu", en);
    }

    r.add("upsR_symmetric", scaled_residual(p.upsR - p.upsR.transpose(), rms_norm(p.upsR)), tol);

    for (size_t a = 0; a < spectra.size(); a++) {
        for (size_t b = a + 1; b < spectra.size(); b++) {
            double gap = INFINITY;
            for (Index i = 0; i < spectra[a].second.size(); i++) {
                for (Index j = 0; j < spectra[b].second.size(); j++) {
                    gap = std::min(gap, std::abs(spectra[a].second(i) - spectra[b].second(j)));
                }
            }
            r.add_flag("disjoint_" + spectra[a].first + "_" + spectra[b].first, gap > tol);
        }
    }

    if (p.ckm) {
        const CMatrix &c = *p.ckm;
        require_shape(c, n, n, "ckm");
        r.add("ckm_unitary", unitarity_residual(c) / std::sqrt(double(n)), tol);
        r.add("ckm_diagonalizes_upsD", offdiag_norm(c.adjoint() * p.upsD * c) / std::sqrt(double(n)) /
                                           std::max(1.0, dscale),
              tol);
    }
    return r;
}

CMatrix build_representation(cplx lambda, cplx lambda_prime, const CMatrix &q, const CMatrix &m, Index n) {
    require_shape(q, 2, 2, "build_representation q");
    require_shape(m, 3, 3, "build_representation m");
    CMatrix id4 = identity(4);
    CMatrix idn = identity(n);
    CMatrix lm = CMatrix::Zero(4, 4);
    lm(0, 0) = lambda;
    lm.block(1, 1, 3, 3) = m;
    CMatrix e1 = unit(4, 0, 0);
    CMatrix e4 = unit(4, 3, 3);
    CMatrix e23 = unit(4, 1, 1) + unit(4, 2, 2);
    return kron(kron(kron(q, id4), e1), idn) + kron(kron(kron(diag2(lambda, lambda_prime), id4), e4), idn) +
           kron(kron(kron(identity(2), lm), e23), idn);
}

CMatrix build_real_representation(cplx lambda, const CMatrix &q, const CMatrix &m, Index n) {
    return build_representation(lambda, std::conj(lambda), q, m, n);
}

CMatrix sm_grading(Index n) {
    CMatrix g = CMatrix::Zero(4, 4);
    g(0, 0) = 1;
    g(1, 1) = 1;
    g(2, 2) = -1;
    g(3, 3) = -1;
    return kron(kron(kron(identity(2), identity(4)), g), identity(n));
}

CMatrix sm_real_structure(Index n) {
    CMatrix p = CMatrix::Zero(4, 4);
    p(0, 2) = 1;
    p(1, 3) = 1;
    p(2, 0) = 1;
    p(3, 1) = 1;
    return kron(kron(kron(identity(2), identity(4)), p), identity(n));
}

CMatrix sm_dirac(const YukawaSet &p) {
    Index n = p.n;
    CMatrix zero = CMatrix::Zero(n, n);
    CMatrix e11 = unit(2, 0, 0);
    CMatrix e22 = unit(2, 1, 1);
    CMatrix l = unit(4, 0, 0);
    CMatrix q = identity(4) - l;
    return kron(kron(e11, l), dirac_block(p.upsNu, p.upsR)) + kron(kron(e11, q), dirac_block(p.upsU, zero)) +
           kron(kron(e22, l), dirac_block(p.upsE, zero)) + kron(kron(e22, q), dirac_block(p.upsD, zero));
}

BlockAlgebra sm_algebra(Index n) {
    BlockAlgebra alg;
    alg.summandDims = {1, 1, 2, 3};
    CMatrix z2 = zeros(2, 2);
    CMatrix z3 = zeros(3, 3);
    alg.images.push_back(build_representation(1.0, 0.0, z2, z3, n));
    alg.images.push_back(build_representation(0.0, 1.0, z2, z3, n));
    for (Index i = 0; i < 2; i++) {
        for (Index j = 0; j < 2; j++) {
            alg.images.push_back(build_representation(0.0, 0.0, unit(2, i, j), z3, n));
        }
    }
    for (Index i = 0; i < 3; i++) {
        for (Index j = 0; j < 3; j++) {
            alg.images.push_back(build_representation(0.0, 0.0, z2, unit(3, i, j), n));
        }
    }
    return alg;
}

FiniteRealSpectralTriple build_triple(const YukawaSet &p, double tol) {
    ValidationReport v = validate_params(p, tol);
    if (!v.pass()) {
        std::string failed;
        for (const auto &c : v.checks) {
            if (!c.pass) {
                failed += (failed.empty() ? "" : ", ") + c.name;
            }
        }
        throw InvalidParams("build_triple: invalid parameters (" + failed + ")", v);
    }
    FiniteRealSpectralTriple t;
    t.dimH = 32 * p.n;
    t.algebra = sm_algebra(p.n);
    t.D = sm_dirac(p);
    t.gamma = sm_grading(p.n);
    t.J.matrixPart = sm_real_structure(p.n);
    t.signs = {1, 1, -1};
    return t;
}

CkmDecomposition extract_ckm(const CMatrix &ups_d, double tol) {
    Index n = ups_d.rows();
    require_shape(ups_d, n, n, "extract_ckm");
    double scale = std::max(1.0, rms_norm(ups_d));
    Eigensystem es = hermitian_eigensystem(ups_d, tol);
    if (es.values.size() > 0 && es.values(0) < -tol * scale) {
        throw ContractError("extract_ckm: upsD is not positive (eigenvalue " + std::to_string(es.values(0)) + ")");
    }
    CkmDecomposition out;
    out.C = es.vectors;  // columns already carry the first-nonzero-positive phase
    cplx det = Eigen::MatrixXcd(out.C).determinant();
    out.C *= std::polar(1.0, -std::arg(det) / double(n));
    out.deltaDown = CMatrix::Zero(n, n);
    for (Index i = 0; i < n; i++) {
        out.deltaDown(i, i) = std::max(0.0, es.values(i));
    }
    return out;
}

CMatrix ckm_of(const YukawaSet &p, double tol) { return p.ckm ? *p.ckm : extract_ckm(p.upsD, tol).C; }

SMBasisLabel label_basis(Index index, Index n) {
    if (n < 1 || index < 0 || index >= 32 * n) {
        throw std::out_of_range("label_basis: index " + std::to_string(index) + " outside [0, " +
                                std::to_string(32 * n) + ")");
    }
    SMBasisLabel l;
    l.generation = index % n + 1;
    Index rest = index / n;
    l.chirality = Chirality(rest % 4);
    rest /= 4;
    l.color = ColorSector(rest % 4);
    l.isospin = Isospin(rest / 4);
    return l;
}

Index basis_index(const SMBasisLabel &l, Index n) {
    if (l.generation < 1 || l.generation > n) {
        throw std::out_of_range("basis_index: generation " + std::to_string(l.generation));
    }
    return ((Index(l.isospin) * 4 + Index(l.color)) * 4 + Index(l.chirality)) * n + (l.generation - 1);
}

std::string particle_name(const SMBasisLabel &l) {
    bool lepton = l.color == ColorSector::Lepton;
    bool up = l.isospin == Isospin::Up;
    std::string base = lepton ? (up ? "nu" : "e") : (up ? "u" : "d");
    switch (l.chirality) {
        case Chirality::PL:
            base += "_L";
            break;
        case Chirality::PR:
            base += "_R";
            break;
        case Chirality::PbarR:
            base += "bar_R";
            break;
        case Chirality::PbarL:
            base += "bar_L";
            break;
    }
    if (!lepton) {
        base += ",c" + std::to_string(int(l.color));
    }
    return base + "," + std::to_string(l.generation);
}

CMatrix sector_projector(int sector, Index n) {
    if (sector < 1 || sector > 4) {
        throw std::out_of_range("sector_projector: sector must be 1..4");
    }
    CMatrix iso = sector == 1 || sector == 3 ? unit(2, 0, 0) : unit(2, 1, 1);
    CMatrix col = sector <= 2 ? unit(4, 0, 0) : CMatrix(identity(4) - unit(4, 0, 0));
    return kron(kron(iso, col), identity(4 * n));
}

namespace {

RVector spread(Rng &rng, Index n, double lo, double hi) {
    RVector v(n);
    double w = (hi - lo) / double(n);
    for (Index i = 0; i < n; i++) {
        v(i) = lo + w * (double(i) + 0.1 + 0.8 * rng.uniform());
    }
    return v;
}

CMatrix diag_of(const RVector &v) {
    CMatrix m = CMatrix::Zero(v.size(), v.size());
    for (Index i = 0; i < v.size(); i++) {
        m(i, i) = v(i);
    }
    return m;
}

CMatrix special_unitary(Rng &rng, Index n) {
    CMatrix c = haar_unitary(rng, n);
    cplx det = Eigen::MatrixXcd(c).determinant();
    return c * std::polar(1.0, -std::arg(det) / double(n));
}

}  // namespace

YukawaSet random_yukawa(Rng &rng, Index n, const YukawaOptions &opt) {
    YukawaSet p;
    p.n = n;
    p.upsE = diag_of(spread(rng, n, 1.0, 2.0));
    p.upsU = diag_of(spread(rng, n, 3.0, 4.0));
    CMatrix c = special_unitary(rng, n);
    p.upsD = c * diag_of(spread(rng, n, 5.0, 6.0)) * c.adjoint();
    p.upsD = 0.5 * (p.upsD + p.upsD.adjoint());
    if (opt.zeroNu) {
        p.upsNu = zeros(n, n);
    } else if (opt.diagonalNu) {
        p.upsNu = diag_of(spread(rng, n, 0.1, 0.9));
    } else {
        p.upsNu = random_with_spectrum(rng, spread(rng, n, 0.1, 0.9));
        p.upsNu = 0.5 * (p.upsNu + p.upsNu.adjoint());
    }
    if (opt.zeroR) {
        p.upsR = zeros(n, n);
    } else {
        CMatrix g = random_gaussian(rng, n, n);
        p.upsR = 0.5 * (g + g.transpose());
    }
    return p;
}

YukawaSet sample_yukawa(Rng &rng, Index n) {
    YukawaSet p;
    p.n = n;
    RVector e(n), u(n), d(n);
    for (Index i = 0; i < n; i++) {
        e(i) = double(i + 1);
        u(i) = double(n + i + 1);
        d(i) = double(2 * n + i + 1);
    }
    p.upsE = diag_of(e);
    p.upsU = diag_of(u);
    CMatrix c = special_unitary(rng, n);
    p.upsD = c * diag_of(d) * c.adjoint();
    p.upsD = 0.5 * (p.upsD + p.upsD.adjoint());
    p.upsNu = zeros(n, n);
    p.upsR = zeros(n, n);
    return p;
}

}  // namespace ncqiso
