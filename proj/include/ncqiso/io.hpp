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

#ifndef NCQISO_IO_HPP
#define NCQISO_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ncqiso/action.hpp"
#include "ncqiso/cqgrep.hpp"
#include "ncqiso/numlin.hpp"
#include "ncqiso/report.hpp"
#include "ncqiso/smtriple.hpp"

namespace ncqiso {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Malformed input or inconsistent dimensions in a file.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses JSON text; errors name the source with line and column.
Json parse_json(const std::string &text, const std::string &source);
Json load_json_file(const std::string &path);
std::string dump_json(const Json &j);

Json to_json(cplx z);
Json to_json(const CMatrix &m);
Json to_json(const BlockMatrix &b);
Json to_json(const YukawaSet &p);
Json to_json(const RepresentedGenerators &g);
Json to_json(const Report &r);

cplx complex_from_json(const Json &j, const std::string &where);
CMatrix matrix_from_json(const Json &j, const std::string &where);
BlockMatrix block_from_json(const Json &j, const std::string &where);
YukawaSet params_from_json(const Json &j);
RepresentedGenerators generators_from_json(const Json &j);

YukawaSet load_params(const std::string &path);
RepresentedGenerators load_generators(const std::string &path);

// "gaussian", "poly:c0,c1,...", or "table:x0:y0,x1:y1,...".
CutoffFunction parse_cutoff(const std::string &spec, double scale);
std::string cutoff_name(const CutoffFunction &f);

// name,residual,bound,pass rows followed by name,value rows.
std::string report_csv(const Report &r);

}  // namespace ncqiso

#endif
