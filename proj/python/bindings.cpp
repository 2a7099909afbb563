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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncqiso/action.hpp"
#include "ncqiso/io.hpp"
#include "ncqiso/isometry.hpp"
#include "ncqiso/realform.hpp"
#include "ncqiso/suite.hpp"

namespace py = pybind11;
using namespace ncqiso;

namespace {

// Reports cross the boundary as JSON text, decoded on the Python side.
std::string report_text(const Report &r) { return to_json(r).dump(); }

YukawaSet params_of(const std::string &text) { return params_from_json(parse_json(text, "params")); }

RepresentedGenerators generators_of(const std::string &text) {
    return generators_from_json(parse_json(text, "generators"));
}

RepresentedGenerators named_point(const std::string &name, uint64_t seed, Index n) {
    Rng rng(seed);
    if (name == "identity") return make_identity_point(n);
    if (name == "classical") return random_classical_point(rng, n);
    if (name == "gauge") return make_gauge_point(rng.phase(), haar_unitary(rng, 3), n);
    if (name == "baryon") return make_baryon_point(rng.phase(), n);
    if (name == "antidiagonal")
        return make_antidiagonal_point(n, haar_unitary(rng, 3), haar_unitary(rng, 3), haar_unitary(rng, 2));
    if (name == "free") return make_free_point(rng, n, 2);
    if (name == "ckm_violating") return make_ckm_violating_point(rng, n);
    throw InputError("unknown generator point " + name);
}

}  // namespace

PYBIND11_MODULE(_ncqiso, m) {
    m.doc() = "Quantum isometries of the finite Standard Model spectral triple";
    m.attr("SCHEMA_VERSION") = kSchemaVersion;
    m.attr("CRITERION_COUNT") = kCriterionCount;
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    m.def("sample_params", [](uint64_t seed) {
        Rng rng = Rng(seed).split(1);
        return dump_json(to_json(sample_yukawa(rng, 3)));
    }, py::arg("seed") = 20260101);
    m.def("random_params", [](uint64_t seed, bool zero_nu) {
        Rng rng(seed);
        YukawaOptions o;
        o.zeroNu = zero_nu;
        return dump_json(to_json(random_yukawa(rng, 3, o)));
    }, py::arg("seed"), py::arg("zero_nu") = false);
    m.def("generator_point", [](const std::string &name, uint64_t seed, Index n) {
        return dump_json(to_json(named_point(name, seed, n)));
    }, py::arg("name"), py::arg("seed") = 0, py::arg("n") = 3);

    m.def("validate", [](const std::string &params, double tol) {
        return report_text(validate_params(params_of(params), tol));
    }, py::arg("params"), py::arg("tol") = kDefaultTol);
    m.def("axioms", [](const std::string &params, double tol) {
        AxiomReport a = check_axioms(build_triple(params_of(params), tol), tol);
        return py::make_tuple(report_text(a), py::make_tuple(a.measured.eps, a.measured.epsPrime,
                                                             a.measured.epsDoublePrime));
    }, py::arg("params"), py::arg("tol") = kDefaultTol);
    m.def("dirac", [](const std::string &params) { return build_triple(params_of(params)).D; }, py::arg("params"));

    m.def("relations", [](const std::string &generators, const std::string &params, double tol) {
        return report_text(check_generator_relations(generators_of(generators), params_of(params), tol));
    }, py::arg("generators"), py::arg("params"), py::arg("tol") = kDefaultTol);
    m.def("assemble_u", [](const std::string &generators) { return assemble_U(generators_of(generators)).U; },
          py::arg("generators"));
    m.def("corep_conditions", [](const std::string &generators, const std::string &params, double tol) {
        FiniteRealSpectralTriple F = build_triple(params_of(params), tol);
        return report_text(verify_corep_conditions(assemble_U(generators_of(generators)), F, tol));
    }, py::arg("generators"), py::arg("params"), py::arg("tol") = kDefaultTol);
    m.def("commutant_dimension", [](const std::string &params, double tol) {
        return classical_commutant_basis(build_triple(params_of(params), tol), tol).realDimension;
    }, py::arg("params"), py::arg("tol") = kDefaultTol);

    m.def("bosonic_action", [](const CMatrix &DA, double lambda) {
        return bosonic_action(DA, gaussian_cutoff(lambda));
    }, py::arg("dirac"), py::arg("cutoff_scale"));
    m.def("action_invariance", [](const std::string &generators, const std::string &params, uint64_t seed,
                                  double lambda, double tol) {
        Rng rng(seed);
        FiniteRealSpectralTriple F = build_triple(params_of(params), tol);
        OneForm A = random_one_form(rng, F);
        CVector psi(F.dimH);
        for (Index i = 0; i < F.dimH; i++) psi(i) = rng.cnormal();
        psi /= psi.norm();
        return report_text(
            extended_actions_invariance(assemble_U(generators_of(generators)), F, A, psi, gaussian_cutoff(lambda), tol));
    }, py::arg("generators"), py::arg("params"), py::arg("seed") = 0, py::arg("cutoff_scale") = 10.0,
          py::arg("tol") = kDefaultTol);
    m.def("half_liberation", [](const std::string &generators, double tol) {
        return report_text(check_half_liberation(generators_of(generators), tol));
    }, py::arg("generators"), py::arg("tol") = kDefaultTol);
    m.def("extended_coaction", [](const std::string &generators, double tol) {
        return report_text(extended_coaction_check(generators_of(generators), tol));
    }, py::arg("generators"), py::arg("tol") = kDefaultTol);

    m.def("run_criterion", [](int id, uint64_t seed, double tol) {
        SuiteOptions o;
        o.seed = seed;
        o.tol = tol;
        CriterionResult c = run_criterion(id, o);
        return py::make_tuple(c.title, report_text(c.report));
    }, py::arg("id"), py::arg("seed") = 20260101, py::arg("tol") = kDefaultTol);
}
