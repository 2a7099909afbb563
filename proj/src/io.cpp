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

#include "ncqiso/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace ncqiso {

namespace {

std::string line_column(const std::string &text, size_t byte) {
    size_t line = 1;
    size_t col = 1;
    for (size_t i = 0; i < byte && i < text.size(); i++) {
        if (text[i] == '\n') {
            line++;
            col = 1;
        } else {
            col++;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const Json &field(const Json &j, const char *key, const std::string &where) {
    if (!j.is_object() || !j.contains(key)) {
        throw InputError(where + ": missing field \"" + key + "\"");
    }
    return j.at(key);
}

Index index_field(const Json &j, const char *key, const std::string &where) {
    const Json &v = field(j, key, where);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw InputError(where + ": field \"" + key + "\" must be a non-negative integer");
    }
    return Index(v.get<long long>());
}

void expect_shape(const CMatrix &m, Index rows, Index cols, const std::string &where) {
    if (m.rows() != rows || m.cols() != cols) {
        throw InputError(where + ": dimension mismatch, expected " + shape_str(rows, cols) + ", got " +
                         shape_str(m.rows(), m.cols()));
    }
}

void check_schema(const Json &j, const std::string &where) {
    if (j.contains("schemaVersion")) {
        const Json &v = j.at("schemaVersion");
        if (!v.is_number_integer() || v.get<int>() != kSchemaVersion) {
            throw InputError(where + ": unsupported schemaVersion (expected " + std::to_string(kSchemaVersion) + ")");
        }
    }
}

Json number(double x) {
    if (!std::isfinite(x)) {
        return Json(nullptr);
    }
    return Json(x);
}

}  // namespace

Json parse_json(const std::string &text, const std::string &source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        std::string msg = e.what();
        auto pos = msg.find("]");
        std::string detail = pos == std::string::npos ? msg : msg.substr(pos + 2);
        throw InputError(source + ": malformed JSON at " + line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " +
                         detail);
    }
}

Json load_json_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError(path + ": cannot open file");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), path);
}

std::string dump_json(const Json &j) { return j.dump(2) + "\n"; }

Json to_json(cplx z) { return Json::array({number(z.real()), number(z.imag())}); }

Json to_json(const CMatrix &m) {
    Json rows = Json::array();
    for (Index i = 0; i < m.rows(); i++) {
        Json row = Json::array();
        for (Index j = 0; j < m.cols(); j++) {
            row.push_back(to_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const BlockMatrix &b) {
    Json j;
    j["blockDim"] = b.blockDim;
    j["rows"] = b.blockRows;
    j["cols"] = b.blockCols;
    j["data"] = to_json(b.data);
    return j;
}

Json to_json(const YukawaSet &p) {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["kind"] = "yukawa";
    j["n"] = p.n;
    j["upsNu"] = to_json(p.upsNu);
    j["upsE"] = to_json(p.upsE);
    j["upsU"] = to_json(p.upsU);
    j["upsD"] = to_json(p.upsD);
    j["upsR"] = to_json(p.upsR);
    if (p.ckm) {
        j["ckm"] = to_json(*p.ckm);
    }
    return j;
}

Json to_json(const RepresentedGenerators &g) {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["kind"] = "generators";
    j["n"] = g.n;
    j["d"] = g.d;
    Json x = Json::array();
    for (const auto &m : g.x) {
        x.push_back(to_json(m));
    }
    j["x"] = std::move(x);
    Json t = Json::array();
    for (const auto &m : g.T) {
        t.push_back(to_json(m));
    }
    j["T"] = std::move(t);
    j["V"] = to_json(g.V);
    return j;
}

Json to_json(const Report &r) {
    Json checks = Json::array();
    for (const auto &c : r.checks) {
        Json e;
        e["name"] = c.name;
        e["residual"] = number(c.residual);
        e["bound"] = number(c.bound);
        e["pass"] = c.pass;
        checks.push_back(std::move(e));
    }
    Json values = Json::object();
    for (const auto &[k, v] : r.values) {
        values[k] = number(v);
    }
    Json j;
    j["pass"] = r.pass();
    j["maxResidual"] = number(r.max_residual());
    j["checks"] = std::move(checks);
    j["values"] = std::move(values);
    return j;
}

cplx complex_from_json(const Json &j, const std::string &where) {
    if (j.is_number()) {
        return cplx(j.get<double>(), 0.0);
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InputError(where + ": complex numbers are [re, im] pairs");
    }
    return cplx(j[0].get<double>(), j[1].get<double>());
}

CMatrix matrix_from_json(const Json &j, const std::string &where) {
    if (!j.is_array()) {
        throw InputError(where + ": matrices are arrays of rows");
    }
    Index rows = Index(j.size());
    Index cols = rows == 0 ? 0 : Index(j[0].is_array() ? j[0].size() : 0);
    CMatrix m(rows, cols);
    for (Index i = 0; i < rows; i++) {
        const Json &row = j[size_t(i)];
        if (!row.is_array()) {
            throw InputError(where + ": row " + std::to_string(i) + " is not an array");
        }
        if (Index(row.size()) != cols) {
            throw InputError(where + ": dimension mismatch in row " + std::to_string(i) + ", expected " +
                             std::to_string(cols) + " entries, got " + std::to_string(row.size()));
        }
        for (Index k = 0; k < cols; k++) {
            m(i, k) = complex_from_json(row[size_t(k)],
                                        where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
        }
    }
    return m;
}

BlockMatrix block_from_json(const Json &j, const std::string &where) {
    Index bd = index_field(j, "blockDim", where);
    Index rows = index_field(j, "rows", where);
    Index cols = index_field(j, "cols", where);
    if (bd == 0) {
        throw InputError(where + ": blockDim must be positive");
    }
    CMatrix data = matrix_from_json(field(j, "data", where), where + ".data");
    expect_shape(data, rows * bd, cols * bd, where + ".data");
    return BlockMatrix(rows, cols, bd, data);
}

YukawaSet params_from_json(const Json &j) {
    const std::string w = "params";
    check_schema(j, w);
    YukawaSet p;
    p.n = index_field(j, "n", w);
    if (p.n == 0) {
        throw InputError(w + ": n must be positive");
    }
    auto get = [&](const char *key, bool optional_zero) -> CMatrix {
        if (optional_zero && !j.contains(key)) {
            return CMatrix::Zero(p.n, p.n);
        }
        CMatrix m = matrix_from_json(field(j, key, w), w + "." + key);
        expect_shape(m, p.n, p.n, w + "." + key);
        return m;
    };
    p.upsNu = get("upsNu", true);
    p.upsE = get("upsE", false);
    p.upsU = get("upsU", false);
    p.upsD = get("upsD", false);
    p.upsR = get("upsR", true);
    if (j.contains("ckm")) {
        p.ckm = get("ckm", false);
    }
    return p;
}

RepresentedGenerators generators_from_json(const Json &j) {
    const std::string w = "generators";
    check_schema(j, w);
    RepresentedGenerators g;
    g.n = index_field(j, "n", w);
    g.d = index_field(j, "d", w);
    if (g.n == 0 || g.d == 0) {
        throw InputError(w + ": n and d must be positive");
    }
    const Json &x = field(j, "x", w);
    if (!x.is_array() || Index(x.size()) != g.n + 1) {
        throw InputError(w + ".x: dimension mismatch, expected " + std::to_string(g.n + 1) + " matrices, got " +
                         std::to_string(x.is_array() ? x.size() : 0));
    }
    for (size_t k = 0; k < x.size(); k++) {
        std::string wk = w + ".x[" + std::to_string(k) + "]";
        CMatrix m = matrix_from_json(x[k], wk);
        expect_shape(m, g.d, g.d, wk);
        g.x.push_back(m);
    }
    const Json &t = field(j, "T", w);
    if (!t.is_array() || Index(t.size()) != g.n) {
        throw InputError(w + ".T: dimension mismatch, expected " + std::to_string(g.n) + " block matrices, got " +
                         std::to_string(t.is_array() ? t.size() : 0));
    }
    for (size_t k = 0; k < t.size(); k++) {
        std::string wk = w + ".T[" + std::to_string(k) + "]";
        BlockMatrix b = block_from_json(t[k], wk);
        if (b.blockRows != 3 || b.blockCols != 3 || b.blockDim != g.d) {
            throw InputError(wk + ": dimension mismatch, expected 3x3 blocks of size " + std::to_string(g.d) +
                             ", got " + shape_str(b.blockRows, b.blockCols) + " blocks of size " +
                             std::to_string(b.blockDim));
        }
        g.T.push_back(b);
    }
    g.V = block_from_json(field(j, "V", w), w + ".V");
    if (g.V.blockRows != g.n || g.V.blockCols != g.n || g.V.blockDim != g.d) {
        throw InputError(w + ".V: dimension mismatch, expected " + shape_str(g.n, g.n) + " blocks of size " +
                         std::to_string(g.d) + ", got " + shape_str(g.V.blockRows, g.V.blockCols) +
                         " blocks of size " + std::to_string(g.V.blockDim));
    }
    return g;
}

YukawaSet load_params(const std::string &path) {
    Json j = load_json_file(path);
    try {
        return params_from_json(j);
    } catch (const InputError &e) {
        throw InputError(path + ": " + e.what());
    }
}

RepresentedGenerators load_generators(const std::string &path) {
    Json j = load_json_file(path);
    try {
        return generators_from_json(j);
    } catch (const InputError &e) {
        throw InputError(path + ": " + e.what());
    }
}

CutoffFunction parse_cutoff(const std::string &spec, double scale) {
    CutoffFunction f;
    f.scale = scale;
    auto numbers = [&](const std::string &body, char sep) {
        std::vector<double> out;
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, sep)) {
            try {
                size_t used = 0;
                double v = std::stod(tok, &used);
                if (used != tok.size()) {
                    throw std::invalid_argument(tok);
                }
                out.push_back(v);
            } catch (const std::exception &) {
                throw InputError("cutoff: cannot parse number \"" + tok + "\"");
            }
        }
        return out;
    };
    if (spec.empty() || spec == "gaussian") {
        f.kind = CutoffFunction::Kind::Gaussian;
    } else if (spec.rfind("poly:", 0) == 0) {
        f.kind = CutoffFunction::Kind::EvenPolynomial;
        f.coefficients = numbers(spec.substr(5), ',');
        if (f.coefficients.empty()) {
            throw InputError("cutoff: polynomial needs coefficients");
        }
    } else if (spec.rfind("table:", 0) == 0) {
        f.kind = CutoffFunction::Kind::Table;
        std::stringstream ss(spec.substr(6));
        std::string pair;
        while (std::getline(ss, pair, ',')) {
            std::vector<double> xy = numbers(pair, ':');
            if (xy.size() != 2) {
                throw InputError("cutoff: table entries are x:y pairs, got \"" + pair + "\"");
            }
            f.tableX.push_back(xy[0]);
            f.tableY.push_back(xy[1]);
        }
    } else {
        throw InputError("cutoff: unknown kind \"" + spec + "\" (gaussian, poly:..., table:...)");
    }
    try {
        f.validate();
    } catch (const ContractError &e) {
        throw InputError(e.what());
    }
    return f;
}

std::string cutoff_name(const CutoffFunction &f) {
    std::ostringstream os;
    os << std::setprecision(17);
    switch (f.kind) {
    case CutoffFunction::Kind::Gaussian:
        return "gaussian";
    case CutoffFunction::Kind::EvenPolynomial:
        os << "poly:";
        for (size_t i = 0; i < f.coefficients.size(); i++) {
            os << (i ? "," : "") << f.coefficients[i];
        }
        return os.str();
    case CutoffFunction::Kind::Table:
        os << "table:";
        for (size_t i = 0; i < f.tableX.size(); i++) {
            os << (i ? "," : "") << f.tableX[i] << ":" << f.tableY[i];
        }
        return os.str();
    }
    return "gaussian";
}

std::string report_csv(const Report &r) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "name,residual,bound,pass\n";
    for (const auto &c : r.checks) {
        os << c.name << "," << c.residual << "," << c.bound << "," << (c.pass ? "true" : "false") << "\n";
    }
    if (!r.values.empty()) {
        os << "name,value\n";
        for (const auto &[k, v] : r.values) {
            os << k << "," << v << "\n";
        }
    }
    return os.str();
}

}  // namespace ncqiso
