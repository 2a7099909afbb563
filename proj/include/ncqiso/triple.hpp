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

#ifndef NCQISO_TRIPLE_HPP
#define NCQISO_TRIPLE_HPP

#include <optional>
#include <vector>

#include "ncqiso/numlin.hpp"
#include "ncqiso/report.hpp"

namespace ncqiso {

struct KOSigns {
    int eps = 1;
    int epsPrime = 1;
    int epsDoublePrime = 1;

    bool operator==(const KOSigns &) const = default;
};

// v -> matrixPart * conj(v).
struct AntiUnitary {
    CMatrix matrixPart;

    CVector apply(const CVector &v) const { return matrixPart * v.conjugate(); }
    // Linear operator J A J^{-1}.
    CMatrix conjugate_op(const CMatrix &a) const { return matrixPart * a.conjugate() * matrixPart.adjoint(); }
    AntiUnitary tensor(const AntiUnitary &other) const { return {kron(matrixPart, other.matrixPart)}; }
};

// Direct sum of full matrix algebras M_k embedded in B(H) through the images of
// their matrix units, ordered by summand, then row, then column.
struct BlockAlgebra {
    std::vector<Index> summandDims;
    std::vector<CMatrix> images;

    Index size() const { return Index(images.size()); }
    Index offset(Index s) const;
    Index index(Index s, Index i, Index j) const { return offset(s) + i * summandDims[s] + j; }
    const CMatrix &E(Index s, Index i, Index j) const { return images[index(s, i, j)]; }
    // Image of the tuple (a_0, ..., a_{S-1}), a_s of size summandDims[s].
    CMatrix embed(const std::vector<CMatrix> &blocks) const;
    BlockAlgebra tensor(const BlockAlgebra &other) const;
};

// Structure-constant check of the stored images: products, adjoints, unit.
Report check_embedding(const BlockAlgebra &alg, double tol = kDefaultTol);

struct FiniteRealSpectralTriple {
    Index dimH = 0;
    BlockAlgebra algebra;
    CMatrix D;
    std::optional<CMatrix> gamma;  // empty marks an odd triple (literal identity grading)
    AntiUnitary J;
    KOSigns signs;

    bool even() const { return gamma.has_value(); }
    CMatrix grading() const { return gamma ? *gamma : identity(dimH); }
};

struct AxiomReport : Report {
    KOSigns measured;
};

AxiomReport check_axioms(const FiniteRealSpectralTriple &t, double tol = kDefaultTol);

// Signs for which J^2 = eps, JD = eps' DJ, J gamma = eps'' gamma J fit best.
KOSigns measure_signs(const FiniteRealSpectralTriple &t);

// D = D1 (x) gamma2 + 1 (x) D2, gamma = gamma1 (x) gamma2, J = J1 (x) J2.
FiniteRealSpectralTriple product_triple(const FiniteRealSpectralTriple &t1, const FiniteRealSpectralTriple &t2);

// C on C^1 with D = 0.
FiniteRealSpectralTriple trivial_triple();
// H = C^2 (x) C^2, A = C + C acting diagonally on the first leg,
// D = m (sx (x) 1 - 1 (x) sx), gamma = sz (x) sz, J = swap o conj; signs (+1, -1, +1).
FiniteRealSpectralTriple toy_even_triple(double m = 1.0);
// H = C^2, A = C + C diagonal, D = diag(m1, m2), J = conj, odd.
FiniteRealSpectralTriple toy_odd_triple(double m1 = 1.0, double m2 = -1.0);

}  // namespace ncqiso

#endif
