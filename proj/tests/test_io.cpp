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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "ncqiso/io.hpp"

using namespace ncqiso;

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string kData = NCQISO_DATA_DIR;

}  // namespace

TEST(Io, BundledFixturesRoundTripByteIdentically) {
    std::string p = read_file(kData + "/sample_params.json");
    EXPECT_EQ(dump_json(to_json(params_from_json(parse_json(p, "params")))), p);
    for (const char *name : {"/identity_generators.json", "/ckm_violating_generators.json"}) {
        std::string g = read_file(kData + name);
        EXPECT_EQ(dump_json(to_json(generators_from_json(parse_json(g, name)))), g);
    }
}

TEST(Io, ComplexEncoding) {
    Json j = to_json(cplx(1.5, -2.0));
    EXPECT_EQ(j.dump(), "[1.5,-2.0]");
    EXPECT_EQ(complex_from_json(j, "z"), cplx(1.5, -2.0));
}

TEST(Io, BlockMatrixSchema) {
    BlockMatrix b(1, 2, 2, CMatrix::Ones(2, 4));
    Json j = to_json(b);
    EXPECT_EQ(j["blockDim"], 2);
    EXPECT_EQ(j["rows"], 1);
    EXPECT_EQ(j["cols"], 2);
    BlockMatrix back = block_from_json(j, "b");
    EXPECT_EQ(back.data, b.data);
}

TEST(Io, MalformedJsonReportsLineAndColumn) {
    try {
        parse_json("{\n  \"n\": 3,\n  oops\n}", "bad.json");
        FAIL();
    } catch (const InputError &e) {
        std::string w = e.what();
        EXPECT_NE(w.find("line 3"), std::string::npos) << w;
        EXPECT_NE(w.find("column"), std::string::npos) << w;
    }
}

TEST(Io, DimensionMismatchReportsExpectedAndActual) {
    Json j = parse_json(read_file(kData + "/sample_params.json"), "params");
    j["upsE"].erase(j["upsE"].size() - 1);
    try {
        params_from_json(j);
        FAIL();
    } catch (const InputError &e) {
        std::string w = e.what();
        EXPECT_NE(w.find("expected"), std::string::npos) << w;
        EXPECT_NE(w.find("got"), std::string::npos) << w;
    }
}

TEST(Io, CutoffSpecifications) {
    EXPECT_EQ(parse_cutoff("gaussian", 2.0).kind, CutoffFunction::Kind::Gaussian);
    CutoffFunction p = parse_cutoff("poly:1,-0.5", 1.0);
    EXPECT_EQ(p.kind, CutoffFunction::Kind::EvenPolynomial);
    EXPECT_EQ(p.coefficients.size(), 2u);
    CutoffFunction t = parse_cutoff("table:0:1,1:0.5,2:0", 1.0);
    EXPECT_EQ(t.kind, CutoffFunction::Kind::Table);
    EXPECT_THROW(parse_cutoff("cosine", 1.0), InputError);
}

TEST(Io, ReportJsonIsStable) {
    Report r;
    r.add("a", 0.25, 1.0);
    r.add_flag("b", false);
    r.note("v", 3.0);
    Json j = to_json(r);
    EXPECT_FALSE(j["pass"].get<bool>());
    EXPECT_EQ(j["checks"].size(), 2u);
    EXPECT_EQ(dump_json(j), dump_json(to_json(r)));
    EXPECT_NE(report_csv(r).find("a,0.25,1,true"), std::string::npos);
}
