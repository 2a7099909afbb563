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

#ifndef NCQISO_ACTION_HPP
#define NCQISO_ACTION_HPP

#include <string>
#include <utility>
#include <vector>

#include "ncqiso/isometry.hpp"
#include "ncqiso/numlin.hpp"
#include "ncqiso/report.hpp"
#include "ncqiso/rng.hpp"
#include "ncqiso/triple.hpp"

namespace ncqiso {

struct OneForm {
    CMatrix A;
    bool selfAdjoint = false;
};

// Coefficient tuple of an algebra element, one block per summand.
using AlgebraElement = std::vector<CMatrix>;

AlgebraElement random_algebra_element(Rng &rng, const BlockAlgebra &alg);

// A = sum_i a_i [D, b_i], optionally replaced by (A + A*)/2.
OneForm generate_one_form(const FiniteRealSpectralTriple &F,
                          const std::vector<std::pair<AlgebraElement, AlgebraElement>> &pairs,
                          bool symmetrize = true);
OneForm random_one_form(Rng &rng, const FiniteRealSpectralTriple &F, int terms = 3);

// D + A + eps' J A J^{-1}. Throws ContractError unless A is self-adjoint.
CMatrix fluctuate(const FiniteRealSpectralTriple &F, const OneForm &A, double tol = kDefaultTol);

struct CutoffFunction {
    enum class Kind { Gaussian, EvenPolynomial, Table };
    Kind kind = Kind::Gaussian;
    double scale = 1.0;                // Lambda
    std::vector<double> coefficients;  // f(x) = sum_k c_k x^(2k)
    std::vector<double> tableX;        // increasing abscissae for |x|
    std::vector<double> tableY;

    double operator()(double x) const;
    // Throws ContractError on a non-positive scale or malformed table.
    void validate() const;
};

CutoffFunction gaussian_cutoff(double scale = 1.0);

double bosonic_action(const CMatrix &DA, const CutoffFunction &f, double tol = kDefaultTol);
// f(D/Lambda) through the hermitian eigensystem.
CMatrix cutoff_operator(const CMatrix &DA, const CutoffFunction &f, double tol = kDefaultTol);

enum class FermionVariant { Plain, Real };

// (1 + gamma)/2, or the identity for odd triples.
CMatrix positive_projector(const FiniteRealSpectralTriple &F);
cplx fermionic_action(const FiniteRealSpectralTriple &F, const OneForm &A, const CVector &psi, FermionVariant variant,
                      double tol = kDefaultTol);

// 1 (x) U on H_M (x) H_F (x) K for a corepresentation of the right factor.
CMatrix lift_corepresentation(const CMatrix &U, Index left_dim);

enum class ActionParts { Both, Bosonic, Fermionic };

struct ActionReport : Report {
    double Sb = 0.0;
    cplx SfPlain = 0.0;
    cplx SfReal = 0.0;
    std::vector<double> spectrum;
};

// Extended actions for U on H (x) K (already lifted for product triples), At = U (A (x) 1) U*.
// Q-valued vectors are N d x d matrices Phi (blocks Phi_h), and D_At acts on them by
// Phi -> (D (x) 1 + At) Phi + eps' eps (J (x) *) At (J (x) *) Phi, where (J (x) *) Phi has blocks
// sum_h J_{h'h} Phi_h*. The bosonic action traces f(D_At / Lambda) over H on this space
// (H (x) K (x) Kbar); the fermionic actions pair Phi = U (psi (x) 1) through <Phi, Psi>_Q = Phi* Psi.
// At d = 1 the operator identity D_At = U (D_A (x) 1) U* is checked as well.
// Throws ContractError if U fails unitarity or the D, gamma, J conditions.
ActionReport extended_actions_invariance(const CMatrix &U, Index d, const FiniteRealSpectralTriple &F,
                                         const OneForm &A, const CVector &psi, const CutoffFunction &f,
                                         double tol = kDefaultTol, ActionParts parts = ActionParts::Both);
ActionReport extended_actions_invariance(const Corepresentation &c, const FiniteRealSpectralTriple &F,
                                         const OneForm &A, const CVector &psi, const CutoffFunction &f,
                                         double tol = kDefaultTol, ActionParts parts = ActionParts::Both);

// ||(Tr (x) id) B (L (x) 1) B* - Tr(L) 1||.
double trace_identity_residual(const BlockMatrix &B, const CMatrix &L);
Report trace_identity_check(const BlockMatrix &B, const CMatrix &L, double tol = kDefaultTol);
// Sweeps every matrix unit L; check "all_units" passes iff the identity holds for all of them.
Report trace_identity_all_units(const BlockMatrix &B, double tol = kDefaultTol);

}  // namespace ncqiso

#endif
