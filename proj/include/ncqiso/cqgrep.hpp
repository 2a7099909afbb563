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

#ifndef NCQISO_CQGREP_HPP
#define NCQISO_CQGREP_HPP

#include <vector>

#include "ncqiso/numlin.hpp"
#include "ncqiso/report.hpp"
#include "ncqiso/rng.hpp"
#include "ncqiso/smtriple.hpp"

namespace ncqiso {

// Concrete matrices on K (dimension d) for x_0..x_n, T_1..T_n (3x3 grids) and V (n x n grid).
struct RepresentedGenerators {
    Index n = 0;
    Index d = 1;
    std::vector<CMatrix> x;
    std::vector<BlockMatrix> T;
    BlockMatrix V;

    // Throws ShapeError describing the first inconsistency.
    void validate_shapes() const;
    const CMatrix &x0() const { return x[0]; }
};

Report check_generator_relations(const RepresentedGenerators &g, const YukawaSet &p, double tol = kDefaultTol);
Report check_au_R_relations(const BlockMatrix &u, const CMatrix &R, double tol = kDefaultTol);
// Checks "half_liberation" and "projective_commutativity".
Report check_half_liberation(const RepresentedGenerators &g, double tol = kDefaultTol);
double half_liberation_residual(const BlockMatrix &t);
double projective_commutativity_residual(const BlockMatrix &t);

RepresentedGenerators make_identity_point(Index n);
RepresentedGenerators make_classical_point(Index n, const std::vector<cplx> &x, const std::vector<CMatrix> &g,
                                           const CMatrix &v0);
RepresentedGenerators make_gauge_point(cplx z, const CMatrix &t, Index n);
RepresentedGenerators make_baryon_point(cplx y, Index n);
// d = 2: (T)_{jk} = [[0, g_jk], [h_jk, 0]] for all m, x_0 = w, x_k = w*, V = I.
RepresentedGenerators make_antidiagonal_point(Index n, const CMatrix &g, const CMatrix &h, const CMatrix &w);
BlockMatrix antidiagonal_biunitary(const CMatrix &g, const CMatrix &h);
// (g (x) 1) diag(W_1, W_2, W_3) (h (x) 1) with Haar g, h, W_i: biunitary, generically not half-liberated.
BlockMatrix free_biunitary(Rng &rng, Index d);
// Independent Haar x_k, all T_m equal to one free biunitary, V = I. Passes when upsNu = 0.
RepresentedGenerators make_free_point(Rng &rng, Index n, Index d);
// Classical point with x_0 x_k = 1 and all T_m equal to one Haar g.
RepresentedGenerators random_classical_point(Rng &rng, Index n);
// d = 1 with independent Haar g_m: breaks the CKM sum and the (T*)(T) amalgamation.
RepresentedGenerators make_ckm_violating_point(Rng &rng, Index n);

RepresentedGenerators direct_sum(const RepresentedGenerators &g1, const RepresentedGenerators &g2);
RepresentedGenerators convolve(const RepresentedGenerators &g1, const RepresentedGenerators &g2);

// Block-diagonal n x n grid with the given d x d diagonal blocks.
BlockMatrix block_diag(const std::vector<CMatrix> &blocks);

}  // namespace ncqiso

#endif
