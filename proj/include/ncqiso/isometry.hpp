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

#ifndef NCQISO_ISOMETRY_HPP
#define NCQISO_ISOMETRY_HPP

#include <stdexcept>
#include <vector>

#include "ncqiso/cqgrep.hpp"
#include "ncqiso/numlin.hpp"
#include "ncqiso/report.hpp"
#include "ncqiso/smtriple.hpp"
#include "ncqiso/triple.hpp"

namespace ncqiso {

struct Corepresentation {
    CMatrix U;  // on H_F (x) K, H-major
    RepresentedGenerators generators;
    Index n = 0;
    Index d = 1;
};

struct ContainmentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Corepresentation assemble_U(const RepresentedGenerators &g);

// Checks U_unitary, commutes_D, commutes_gamma, J_compatible, containment, containment_M3.
Report verify_corep_conditions(const Corepresentation &c, const FiniteRealSpectralTriple &F, double tol = kDefaultTol);

// Ad_U(E_a) = sum_b E_b (x) coef[a][b].
struct CoactionCoefficients {
    std::vector<std::vector<CMatrix>> coef;
    double residual = 0.0;
};
CoactionCoefficients adjoint_coaction_coefficients(const Corepresentation &c, const FiniteRealSpectralTriple &F,
                                                   double tol = kDefaultTol);
// Checks the coaction against the generator formulas (e12 of M_2 -> x_0, M_3 -> (T_1*)_ik (T_1)_lj,
// coinvariance of the C summands and of e11, e22 in M_2).
Report coaction_formula_check(const Corepresentation &c, const FiniteRealSpectralTriple &F,
                              double tol = kDefaultTol);

Report transformation_laws_check(const Corepresentation &c, double tol = kDefaultTol);

// The corepresentation identity at the represented level: U_(12) U_(13) on H (x) K1 (x) K2.
CMatrix compose_corepresentations(const CMatrix &u1, Index d1, const CMatrix &u2, Index d2);

struct CommutantReport {
    Index realDimension = 0;
    std::vector<CMatrix> basis;  // orthonormal for Re tr(A* B)
    Index components = 0;
    Report residuals;
};

// Real solution space of [X,D] = 0, [X,gamma] = 0, J conj(X) = X J. The real-linear
// system is split into independent blocks (unknowns that share no equation), each
// solved by a nullspace call.
CommutantReport classical_commutant_basis(const FiniteRealSpectralTriple &F, double tol = kDefaultTol);
// Frobenius distance from X to the real span of the basis, over rms(X).
double commutant_span_residual(const CommutantReport &r, const CMatrix &x);

struct BlockAnsatz {
    Index n = 0;
    Index d = 1;
    // alpha[i][j1][k1], i in {0,1} (isospin), j1,k1 in 0..3 (chirality slot).
    BlockMatrix alpha[2][4][4];
    // beta[i][j0][k0][j1][k1], j0,k0 in 0..2 (color).
    BlockMatrix beta[2][3][3][4][4];
};

BlockAnsatz extract_block_ansatz(const Corepresentation &c);

Report structural_reduction_check(const FiniteRealSpectralTriple &F, const YukawaSet &p,
                                  const CommutantReport &report, const Corepresentation &c,
                                  double tol = kDefaultTol);

}  // namespace ncqiso

#endif
