import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dodosp.certify import (
    SOURCE,
    CertificateStructureError,
    CertVertex,
    FlowCertificate,
    NoPathError,
    build_certificate_graph,
    certificate_violations,
    decide_unrequested,
    flow_to_schedule,
    row_path,
    schedule_to_flow,
    sink,
    verify_certificate,
)
from dodosp.core import Instance, InvalidInstance, Schedule, check_schedule
from dodosp.oracle import brute_force

from .conftest import PACKING_ROWS
from .strategies import interval_instances


def V(d, shift, a, b):
    return CertVertex(d, shift, a, b)


def test_small_graph_structure():
    g = build_certificate_graph(Instance.build(3, 1, lw=2, uo=2))
    # a one-day work period cannot end
    assert g.successors[V(1, "ON", 1, 1)] == (V(2, "ON", 2, 2),)
    # a second off day must be followed by work
    assert g.successors[V(2, "OFF", 2, 0)] == (V(3, "ON", 1, 1),)
    assert V(3, "OFF", 3, 0) not in g.vertices
    # only periods long enough may touch the sink
    assert g.has_edge(V(3, "ON", 2, 3), sink(3))
    assert not g.has_edge(V(3, "ON", 1, 1), sink(3))
    assert g.has_edge(V(3, "OFF", 1, 2), sink(3))


def test_no_switch_before_lower_bound():
    g = build_certificate_graph(Instance.build(2, 1, lw=2))
    assert not g.has_edge(V(1, "ON", 1, 1), V(2, "OFF", 1, 1))
    preds = [u for u, v in g.edges() if v == V(2, "OFF", 1, 1)]
    assert preds == []


def test_trivial_bounds_admit_every_row():
    D = 4
    inst = Instance.build(D, 1)
    for bits in range(2**D):
        row = [(bits >> i) & 1 for i in range(D)]
        assert len(row_path(inst, row)) == D + 2


def test_all_on_path():
    path = row_path(Instance.build(3, 1), [1, 1, 1])
    assert path == [SOURCE, V(1, "ON", 1, 1), V(2, "ON", 2, 2), V(3, "ON", 3, 3), sink(3)]


def test_bad_row_names_worker_and_day():
    inst = Instance.build(4, 2, uw=2)
    with pytest.raises(NoPathError) as err:
        schedule_to_flow(inst, Schedule.from_rows(["1100", "0111"]))
    assert (err.value.worker, err.value.day) == (2, 4)


def test_packing_round_trip():
    inst = Instance.exact(2, [int(c) for c in "1110111011101111011110111110"], Uw=11, lw=3)
    s = Schedule.from_rows(PACKING_ROWS)
    assert check_schedule(inst, s).feasible
    cert = schedule_to_flow(inst, s)
    assert cert.value == 2 and verify_certificate(inst, cert)
    back = flow_to_schedule(inst, cert)
    assert check_schedule(inst, back).feasible
    assert sorted(back.rows()) == sorted(PACKING_ROWS)


def test_identical_rows_double_up():
    inst = Instance.exact(2, [2, 0, 2])
    cert = schedule_to_flow(inst, Schedule.from_rows(["101", "101"]))
    assert set(cert.flow.values()) == {2}
    assert flow_to_schedule(inst, cert).rows() == ["101", "101"]


def test_zero_flow_fails_on_value():
    inst = Instance.build(3, 1)
    problems = certificate_violations(inst, FlowCertificate({}, 0))
    assert any("value" in p for p in problems)


def test_throughput_below_request():
    inst = Instance.build(3, 2, [(1, 2), (1, 2), (1, 2)])
    cert = schedule_to_flow(inst, Schedule.from_rows(["110", "011"]))
    assert verify_certificate(inst, cert)
    tight = Instance.build(3, 2, [(2, 2), (1, 2), (1, 2)])
    problems = certificate_violations(tight, cert)
    assert problems == ["day 1: ON throughput 1 outside [rl=2, ru=2]"]


def test_foreign_edge_is_structural():
    inst = Instance.build(2, 1, lw=2)
    bogus = FlowCertificate({(SOURCE, V(1, "ON", 1, 1)): 1, (V(1, "ON", 1, 1), V(2, "OFF", 1, 1)): 1}, 1)
    with pytest.raises(CertificateStructureError):
        certificate_violations(inst, bogus)


def test_unrequested_decisions():
    assert decide_unrequested(Instance.build(5, 3))
    assert decide_unrequested(Instance.build(3, 1, lw=2, lo=2))
    with pytest.raises(InvalidInstance):
        Instance.build(1, 1, lw=2, lo=2)
    # Uw + Uo < D leaves no row
    assert not decide_unrequested(Instance.build(5, 1, Uw=2, Uo=2))
    with pytest.raises(ValueError):
        decide_unrequested(Instance.build(2, 1, [(1, 1), (0, 1)]))


@given(interval_instances(max_days=5, max_workers=2, upper=False, lower=True).map(
    lambda i: Instance.build(i.days, i.workers, None, **i.bounds.as_dict())))
def test_unrequested_matches_brute_force(inst):
    assert decide_unrequested(inst) == brute_force(inst, "decide")


@given(interval_instances(max_days=5, max_workers=3), st.integers(0, 2**31))
def test_round_trip_and_perturbation(inst, seed):
    s = brute_force(inst, "find_one")
    if s is None:
        return
    cert = schedule_to_flow(inst, s)
    assert verify_certificate(inst, cert)
    back = flow_to_schedule(inst, cert)
    assert check_schedule(inst, back).feasible
    assert sorted(back.rows()) == sorted(s.rows())
    g = build_certificate_graph(inst)
    edges = list(g.edges())
    edge = random.Random(seed).choice(edges)
    for delta in (1, -1):
        assert not verify_certificate(inst, cert.perturbed(edge, delta))
