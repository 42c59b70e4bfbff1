# Copyright 2026 The bellport Authors
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

import itertools
import math

import numpy as np
import pytest

import bellport

SIGNS = (1, -1)
LABELS = list(itertools.product(SIGNS, SIGNS))


def test_bell_states_orthonormal():
    states = [bellport.bell_state(j, k) for j, k in LABELS]
    gram = np.array([[np.vdot(a, b) for b in states] for a in states])
    np.testing.assert_allclose(gram, np.eye(4), atol=1e-15)
    singlet = bellport.bell_state(-1, -1)
    np.testing.assert_allclose(singlet, [0, 1 / math.sqrt(2), -1 / math.sqrt(2), 0], atol=1e-15)


def test_x_operator_is_unitary_with_signs():
    for j, k, p, q in itertools.product(SIGNS, repeat=4):
        x = bellport.x_operator(j, k, p, q)
        np.testing.assert_allclose(x @ x.conj().T, np.eye(2), atol=1e-15)
        assert bellport.epsilon(j, k, p, q) in (1, -1)


def test_teleport_all_branches():
    client = bellport.random_state(1, 7)
    for ch in LABELS:
        channel = bellport.bell_product([ch, (-1, -1)])
        cls = bellport.class_of([ch, (-1, -1)])
        for first, second in itertools.product(LABELS, LABELS):
            r = bellport.teleport(client, channel, cls, [first, second])
            assert r["fidelity"] == pytest.approx(1.0, abs=1e-10)
            assert r["joint_probability"] == pytest.approx(1 / 16, abs=1e-12)


def test_order_parameter_and_classes():
    ghz = np.zeros(16, dtype=complex)
    ghz[0] = ghz[15] = 1 / math.sqrt(2)
    op = bellport.order_parameter(ghz)
    assert op["efficiency"] == pytest.approx(1.0)
    assert op["omega"][(1, 1)] == pytest.approx(3.0)
    weights = bellport.class_weights(bellport.random_state(4, 3))
    assert sum(weights.values()) == pytest.approx(1.0)


def test_fig2_bound_holds():
    rows = bellport.fig2(trials=100, seed=5)
    assert len(rows) == 400
    assert all(bellport.satisfies_bound(r["fidelity"], r["omega"]) for r in rows)


def test_appendix_probabilities():
    phi = 0.3
    probs = bellport.branch_probabilities(bellport.random_state(1, 1), bellport.appendix_a_channel(phi))
    hi, lo = (1 + math.sin(2 * phi)) / 16, (1 - math.sin(2 * phi)) / 16
    assert sorted(np.round(probs, 12)) == sorted([round(lo, 12)] * 8 + [round(hi, 12)] * 8)


def test_scan_and_spin_chains():
    r = bellport.min_fidelity_scan(0.6)
    assert r["minimum"] == pytest.approx(math.cos(0.6), abs=1e-3)
    assert bellport.string_order(bellport.aklt_state(6)) == pytest.approx(-1.0, abs=1e-10)
    _, energy, _ = bellport.heisenberg_ground_state(4)
    assert energy == pytest.approx(-8.0)
    assert bellport.theta_rank(1) == 2


def test_qudit():
    client = bellport.random_state(1, 2, d=3)
    for out in itertools.product(range(3), range(3)):
        r = bellport.qudit_teleport(3, client, [(1, 2)], [out])
        assert r["fidelity"] == pytest.approx(1.0, abs=1e-10)
    assert bellport.qudit_class_dimension(3, 4, 0, 1) == 9


def test_errors():
    with pytest.raises(ValueError):
        bellport.bell_state(0, 1)
    with pytest.raises(ValueError):
        bellport.teleport(bellport.random_state(1, 1), bellport.bell_state(1, 1), (1, 1), [(1, 1), (1, 1)])
    assert issubclass(bellport.ImpossibleOutcome, Exception)


def test_cli_usage_exit_code():
    assert bellport.cli(["teleport", "-L", "3"]) == 64
