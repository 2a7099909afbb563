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

#include "ncqiso/rng.hpp"

#include <cmath>
#include <numbers>

namespace ncqiso {

namespace {

uint64_t mix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(uint64_t seed) : key_(mix64(seed ^ 0x6A09E667F3BCC909ULL)) {}

uint64_t Rng::next_u64() { return mix64(key_ ^ mix64(counter_++)); }

double Rng::uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    // Box-Muller; libstdc++ distributions are not portable bit-for-bit.
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

cplx Rng::cnormal() {
    double re = normal();
    double im = normal();
    return cplx(re, im) * std::sqrt(0.5);
}

cplx Rng::phase() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

Rng Rng::split(uint64_t stream) const { return Rng(mix64(key_ ^ mix64(stream ^ 0xD1B54A32D192ED03ULL)), 0); }

CMatrix random_gaussian(Rng &rng, Index rows, Index cols) {
    CMatrix m(rows, cols);
    for (Index i = 0; i < rows; i++) {
        for (Index j = 0; j < cols; j++) {
            m(i, j) = rng.cnormal();
        }
    }
    return m;
}

CMatrix random_hermitian(Rng &rng, Index n) {
    CMatrix g = random_gaussian(rng, n, n);
    return 0.5 * (g + g.adjoint());
}

CMatrix haar_unitary(Rng &rng, Index n) {
    Eigen::MatrixXcd g = random_gaussian(rng, n, n);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index i = 0; i < n; i++) {
        cplx d = r(i, i);
        double a = std::abs(d);
        if (a > 0) {
            q.col(i) *= d / a;
        }
    }
    return q;
}

CMatrix random_with_spectrum(Rng &rng, const RVector &eigs) {
    CMatrix w = haar_unitary(rng, eigs.size());
    CMatrix d = CMatrix::Zero(eigs.size(), eigs.size());
    for (Index i = 0; i < eigs.size(); i++) {
        d(i, i) = eigs(i);
    }
    return w * d * w.adjoint();
}

}  // namespace ncqiso
