# Copyright 2026 The ncqiso Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os

import numpy as np
import pytest

import ncqiso

DATA = os.environ.get("NCQISO_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def _read(name):
    with open(os.path.join(DATA, name)) as f:
        return f.read()


def test_sample_params_validate_with_ko_six():
    params = _read("sample_params.json")
    assert ncqiso.validate(params)["pass"]
    report, signs = ncqiso.axioms(params)
    assert report["pass"]
    assert signs == (1, 1, -1)


def test_dirac_is_hermitian():
    d = ncqiso.dirac(ncqiso.sample_params(3))
    assert d.shape == (96, 96)
    assert np.allclose(d, d.conj().T, atol=1e-12)


def test_identity_point_assembles_identity():
    u = ncqiso.assemble_u(_read("identity_generators.json"))
    assert np.array_equal(u, np.eye(96))


def test_ckm_violating_point_fails():
    params = _read("sample_params.json")
    gens = _read("ckm_violating_generators.json")
    assert not ncqiso.relations(gens, params)["pass"]
    report = ncqiso.corep_conditions(gens, params)
    failing = {c["name"] for c in report["checks"] if not c["pass"]}
    assert "containment" in failing


def test_free_point_in_minimal_regime():
    params = ncqiso.random_params(5, zero_nu=True)
    gens = ncqiso.generator_point("free", seed=9)
    assert ncqiso.relations(gens, params)["pass"]
    assert ncqiso.corep_conditions(gens, params)["pass"]
    assert not ncqiso.half_liberation(gens)["pass"]
    ext = ncqiso.extended_coaction(gens)
    assert {c["name"]: c["pass"] for c in ext["checks"]}["flag_agreement"]


def test_bosonic_action_matches_numpy():
    d = ncqiso.dirac(ncqiso.sample_params(3))
    ev = np.linalg.eigvalsh(d)
    assert ncqiso.bosonic_action(d, 7.0) == pytest.approx(np.exp(-(ev / 7.0) ** 2).sum(), rel=1e-12)


def test_action_invariance_classical():
    params = ncqiso.random_params(11)
    gens = ncqiso.generator_point("classical", seed=4)
    report = ncqiso.action_invariance(gens, params, seed=2)
    assert report["pass"], report


def test_malformed_json_raises():
    with pytest.raises(ValueError, match="line"):
        ncqiso.validate('{"n": 3,')


def test_criterion_runs():
    title, report = ncqiso.run_criterion(2)
    assert report["pass"]
    assert "first-order" in title
    json.dumps(report)
