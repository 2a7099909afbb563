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

#ifndef NCQISO_REPORT_HPP
#define NCQISO_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace ncqiso {

struct Check {
    std::string name;
    double residual = 0.0;
    double bound = 0.0;
    bool pass = true;
};

// Named residuals with pass flags. `values` holds informational numbers
// (dimensions, action values) that do not gate the overall verdict.
struct Report {
    std::vector<Check> checks;
    std::vector<std::pair<std::string, double>> values;

    void add(const std::string &name, double residual, double bound);
    // Gate a condition that has no natural residual.
    void add_flag(const std::string &name, bool ok);
    void note(const std::string &name, double value);
    void merge(const Report &other, const std::string &prefix = "");

    bool pass() const;
    double max_residual() const;
    const Check *find(const std::string &name) const;
    // Residual of a named check; throws std::out_of_range if absent.
    double residual(const std::string &name) const;
    double value(const std::string &name) const;
};

}  // namespace ncqiso

#endif
