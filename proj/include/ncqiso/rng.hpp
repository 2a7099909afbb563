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

#ifndef NCQISO_RNG_HPP
#define NCQISO_RNG_HPP

#include <cstdint>

#include "ncqiso/numlin.hpp"

namespace ncqiso {

// Counter-based generator: output i is a hash of (key, i). split() derives an
// independent stream, so a single seed fans out deterministically.
class Rng {
   public:
    explicit Rng(uint64_t seed = 0);

    uint64_t next_u64();
    double uniform();  // [0, 1)
    double normal();
    cplx cnormal();    // E|z|^2 = 1
    cplx phase();      // uniform on the unit circle
    Rng split(uint64_t stream) const;

   private:
    Rng(uint64_t key, int) : key_(key) {}
    uint64_t key_;
    uint64_t counter_ = 0;
};

CMatrix random_gaussian(Rng &rng, Index rows, Index cols);
CMatrix random_hermitian(Rng &rng, Index n);
// Haar-distributed unitary: QR of a complex Ginibre matrix with R's diagonal phases absorbed.
CMatrix haar_unitary(Rng &rng, Index n);
// W diag(eigs) W* with Haar W.
CMatrix random_with_spectrum(Rng &rng, const RVector &eigs);

}  // namespace ncqiso

#endif
