# Copyright 2026 The hitlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
import pytest

import hitlab


def test_c5_trace():
    c5 = hitlab.cycle(5)
    cert = hitlab.construct_hitting_set(c5, 2, 2, 0.9, 2, [(1, 2)], seed=7, shortcut=False)
    assert cert["mode"] == "bet-construction"
    assert cert["T"] == [0, 2, 3, 4]
    assert cert["K"] == [1]
    assert hitlab.verify_hitting_set(c5, cert["T"])
    assert hitlab.audit_certificate(c5, cert["text"]) == []


def test_oracles():
    c5 = hitlab.cycle(5)
    assert hitlab.alpha(c5)[0] == 2
    assert len(hitlab.enumerate_mis(c5)) == 5
    assert hitlab.min_hitting_set(c5)[0] == 3
    assert hitlab.min_hitting_set(hitlab.complete(4))[0] == 4
    assert not hitlab.verify_hitting_set(c5, [0])
    assert hitlab.kernel(hitlab.Graph(3, [(0, 1)])) == [2]
    assert hitlab.find_induced_kst(hitlab.cycle(4), 2, 2) == ([0, 2], [1, 3])
    assert hitlab.find_induced_kst(c5, 2, 2) is None
    assert hitlab.complement(c5).m == 5


def test_numerics():
    assert hitlab.budget(100, 0.3, 0.1, 4, 2, 2) == pytest.approx(300 / 14 - 30)
    assert hitlab.prob_low_intersection(4, 2, 2, 2)[0] == pytest.approx(5 / 6)
    assert not hitlab.paper_schedule_feasible(10**6, 1, 2, 0.5)
    r = hitlab.sample_hitting_set(hitlab.cluster([3, 3, 3]), 6, 1, 2000)
    assert r["family_size"] == 27


def test_drc_and_experiment():
    trace = hitlab.drc_clique(hitlab.complete(6), 1.0)
    assert trace["clique"] == list(range(6))
    csv = hitlab.run_experiment(
        '{"families": [{"name": "cluster", "sizes": [2, 3]}], "n_values": [5],'
        ' "seeds": [1], "schedule": {"s": 1, "t": 2, "delta": 0.5, "k": 1, "bins": [[1, 2]]}}'
    )
    assert csv.splitlines()[1].startswith("1,cluster:2+3,5,1,2,2,")


def test_errors():
    with pytest.raises(hitlab.HitlabError):
        hitlab.Graph(2, [(0, 0)])
    with pytest.raises(hitlab.HitlabError):
        hitlab.construct_hitting_set(hitlab.cycle(4), 2, 2, 0.5, 2, [(1, 3)], shortcut=False)
