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

#ifndef NCQISO_SMTRIPLE_HPP
#define NCQISO_SMTRIPLE_HPP

#include <optional>
#include <string>

#include "ncqiso/numlin.hpp"
#include "ncqiso/report.hpp"
#include "ncqiso/rng.hpp"
#include "ncqiso/triple.hpp"

namespace ncqiso {

struct YukawaSet {
    Index n = 3;
    CMatrix upsNu, upsE, upsU, upsD, upsR;
    std::optional<CMatrix> ckm;
};

struct ValidationReport : Report {
    bool minimalRegime = false;  // upsNu == 0
};

struct InvalidParams : std::invalid_argument {
    ValidationReport report;
    InvalidParams(const std::string &what, ValidationReport r) : std::invalid_argument(what), report(std::move(r)) {}
};

ValidationReport validate_params(const YukawaSet &p, double tol = kDefaultTol);

// <lambda, lambda', q, m> on H_F, dimension 32n.
CMatrix build_representation(cplx lambda, cplx lambda_prime, const CMatrix &q, const CMatrix &m, Index n);
CMatrix build_real_representation(cplx lambda, const CMatrix &q, const CMatrix &m, Index n);

CMatrix sm_grading(Index n);
CMatrix sm_real_structure(Index n);  // J_0 matrix part
CMatrix sm_dirac(const YukawaSet &p);
BlockAlgebra sm_algebra(Index n);
FiniteRealSpectralTriple build_triple(const YukawaSet &p, double tol = kDefaultTol);

struct CkmDecomposition {
    CMatrix C;
    CMatrix deltaDown;
};
CkmDecomposition extract_ckm(const CMatrix &ups_d, double tol = kDefaultTol);
// Stored ckm if present, otherwise extracted from upsD.
CMatrix ckm_of(const YukawaSet &p, double tol = kDefaultTol);

enum class Isospin { Up = 0, Down = 1 };
enum class ColorSector { Lepton = 0, Q1 = 1, Q2 = 2, Q3 = 3 };
enum class Chirality { PL = 0, PbarR = 1, PbarL = 2, PR = 3 };

struct SMBasisLabel {
    Isospin isospin = Isospin::Up;
    ColorSector color = ColorSector::Lepton;
    Chirality chirality = Chirality::PL;
    Index generation = 1;  // 1-based

    bool operator==(const SMBasisLabel &) const = default;
};

SMBasisLabel label_basis(Index index, Index n);
Index basis_index(const SMBasisLabel &label, Index n);
// e.g. "nu_L,2", "u_R,c1,3", "ebar_L,1".
std::string particle_name(const SMBasisLabel &label);

// Projector onto V_1 (neutrinos), V_2 (electrons), V_3 (up quarks), V_4 (down quarks).
CMatrix sector_projector(int sector, Index n);

struct YukawaOptions {
    bool zeroNu = false;
    bool zeroR = false;
    bool diagonalNu = false;
};
// Random valid parameters: spectra drawn from disjoint ranges, random special-unitary CKM.
YukawaSet random_yukawa(Rng &rng, Index n, const YukawaOptions &opt = {});
// The bundled n=3 sample: upsE=diag(1,2,3), upsU=diag(4,5,6), upsD=C diag(7,8,9) C*.
YukawaSet sample_yukawa(Rng &rng, Index n = 3);

}  // namespace ncqiso

#endif
