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

#ifndef NCQISO_SUITE_HPP
#define NCQISO_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ncqiso/cqgrep.hpp"
#include "ncqiso/report.hpp"
#include "ncqiso/rng.hpp"
#include "ncqiso/smtriple.hpp"

namespace ncqiso {

inline constexpr int kCriterionCount = 12;

struct SuiteOptions {
    uint64_t seed = 20260101;
    double tol = kDefaultTol;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    Report report;
    bool pass() const { return report.pass(); }
};

struct Fixture {
    std::string name;
    RepresentedGenerators generators;
    bool needsZeroNu = false;  // passes only when upsNu = 0
};

// identity, classical, gauge, baryon, antidiagonal (d = 2) and free (d = free_d, needs upsNu = 0).
std::vector<Fixture> standard_fixtures(Rng &rng, Index n, Index free_d = 3);

std::string criterion_title(int id);
CriterionResult run_criterion(int id, const SuiteOptions &opt);
std::vector<CriterionResult> run_suite(const SuiteOptions &opt);

}  // namespace ncqiso

#endif
