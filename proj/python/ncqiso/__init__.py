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

"""Python bindings for the ncqiso C++ core.

Generator sets and parameters are passed as JSON text in the schema written by the
command-line tool; reports come back as dictionaries.
"""

import json

from . import _ncqiso
from ._ncqiso import (
    CRITERION_COUNT,
    SCHEMA_VERSION,
    InputError,
    assemble_u,
    bosonic_action,
    commutant_dimension,
    dirac,
    generator_point,
    random_params,
    sample_params,
)

__all__ = [
    "CRITERION_COUNT",
    "SCHEMA_VERSION",
    "InputError",
    "action_invariance",
    "assemble_u",
    "axioms",
    "bosonic_action",
    "commutant_dimension",
    "corep_conditions",
    "dirac",
    "extended_coaction",
    "generator_point",
    "half_liberation",
    "random_params",
    "relations",
    "run_criterion",
    "sample_params",
    "validate",
]


def _text(x):
    return x if isinstance(x, str) else json.dumps(x)


def validate(params, tol=1e-9):
    return json.loads(_ncqiso.validate(_text(params), tol))


def axioms(params, tol=1e-9):
    report, signs = _ncqiso.axioms(_text(params), tol)
    return json.loads(report), tuple(signs)


def relations(generators, params, tol=1e-9):
    return json.loads(_ncqiso.relations(_text(generators), _text(params), tol))


def corep_conditions(generators, params, tol=1e-9):
    return json.loads(_ncqiso.corep_conditions(_text(generators), _text(params), tol))


def action_invariance(generators, params, seed=0, cutoff_scale=10.0, tol=1e-9):
    return json.loads(_ncqiso.action_invariance(_text(generators), _text(params), seed, cutoff_scale, tol))


def half_liberation(generators, tol=1e-9):
    return json.loads(_ncqiso.half_liberation(_text(generators), tol))


def extended_coaction(generators, tol=1e-9):
    return json.loads(_ncqiso.extended_coaction(_text(generators), tol))


def run_criterion(criterion, seed=20260101, tol=1e-9):
    title, report = _ncqiso.run_criterion(criterion, seed, tol)
    return title, json.loads(report)
