# Copyright 2026 The codedepth Authors
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

"""Stabilizer codes, low-depth circuits and circuit-depth lower bounds."""

import json as _json

from ._codedepth import (
    KlsPolynomial,
    LayeredCircuit,
    PauliOperator,
    StabilizerGroup,
    builtin_code,
    builtin_code_names,
    circuit_energy,
    hamiltonian_matrix,
    kls_polynomial,
    lightcone,
    parse_code_json,
    random_clifford_circuit,
    toric_code,
)
from . import _codedepth


def depth_lower_bounds(**params):
    """Evaluates every closed-form bound; keys n, k, d, l, eps, delta, t, f, m, c_l."""
    return _json.loads(_codedepth._depth_lower_bounds(params))


def zero_state_distance(code):
    return _codedepth._zero_state_distance(code)


def frontier(code, t_max=3, strategy="random-clifford", budget=1000, seed=0):
    """Best energy found per depth, as a list of records."""
    return _json.loads(_codedepth._frontier(code, t_max, strategy, budget, seed))


def run_cli(*args):
    """Runs the command-line interface in process; returns (exit_code, stdout, stderr)."""
    return _codedepth._cli([str(a) for a in args])
