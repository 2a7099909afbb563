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

#include "ncqiso/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncqiso {

void Report::add(const std::string &name, double residual, double bound) {
    checks.push_back({name, residual, bound, std::isfinite(residual) && residual < bound});
}

void Report::add_flag(const std::string &name, bool ok) { checks.push_back({name, ok ? 0.0 : 1.0, 0.5, ok}); }

void Report::note(const std::string &name, double value) { values.emplace_back(name, value); }

void Report::merge(const Report &other, const std::string &prefix) {
    for (const auto &c : other.checks) {
        checks.push_back({prefix + c.name, c.residual, c.bound, c.pass});
    }
    for (const auto &v : other.values) {
        values.emplace_back(prefix + v.first, v.second);
    }
}

bool Report::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

double Report::max_residual() const {
    double m = 0.0;
    for (const auto &c : checks) {
        m = std::max(m, c.residual);
    }
    return m;
}

const Check *Report::find(const std::string &name) const {
    for (const auto &c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

double Report::residual(const std::string &name) const {
    const Check *c = find(name);
    if (c == nullptr) {
        throw std::out_of_range("no check named " + name);
    }
    return c->residual;
}

double Report::value(const std::string &name) const {
    for (const auto &v : values) {
        if (v.first == name) {
            return v.second;
        }
    }
    throw std::out_of_range("no value named " + name);
}

}  // namespace ncqiso
