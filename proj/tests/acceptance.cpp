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

// Runs the acceptance criteria and prints one line per criterion.
// Usage: acceptance [--criterion N] [--seed S]

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "ncqiso/suite.hpp"

int main(int argc, char **argv) {
    ncqiso::SuiteOptions opt;
    int first = 1;
    int last = ncqiso::kCriterionCount;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (std::strcmp(argv[i], "--criterion") == 0) {
            first = last = std::atoi(argv[i + 1]);
        } else if (std::strcmp(argv[i], "--seed") == 0) {
            opt.seed = std::strtoull(argv[i + 1], nullptr, 10);
        } else {
            std::fprintf(stderr, "usage: acceptance [--criterion N] [--seed S]\n");
            return 3;
        }
    }
    if (first < 1 || last > ncqiso::kCriterionCount) {
        std::fprintf(stderr, "criterion must be in 1..%d\n", ncqiso::kCriterionCount);
        return 3;
    }
    int failed = 0;
    for (int id = first; id <= last; id++) {
        ncqiso::CriterionResult c = ncqiso::run_criterion(id, opt);
        std::string worst;
        double ratio = -1.0;
        for (const auto &k : c.report.checks) {
            double q = k.pass ? k.residual / k.bound : 1e300;
            if (q > ratio) {
                ratio = q;
                worst = k.name;
            }
        }
        std::printf("criterion %2d %s  %-45s checks=%zu max_residual=%.3e worst=%s\n", id,
                    c.pass() ? "PASS" : "FAIL", c.title.c_str(), c.report.checks.size(),
                    c.report.max_residual(), worst.c_str());
        std::fflush(stdout);
        failed += !c.pass();
    }
    std::printf("%d/%d criteria passed (seed %llu)\n", last - first + 1 - failed, last - first + 1,
                static_cast<unsigned long long>(opt.seed));
    return failed == 0 ? 0 : 1;
}
