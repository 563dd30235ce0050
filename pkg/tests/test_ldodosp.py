import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dodosp.core import Infeasible, Instance, InvalidInstance, Schedule, check_fifo, check_schedule
from dodosp.diffcon import NegativeCycle, is_feasible_potential
from dodosp.ldodosp import (
    BoundFunctions,
    CounterConstraint,
    PeriodCounters,
    build_graph,
    counter_violations,
    counters_from_schedule,
    counters_to_schedule,
    off_counters,
    solve_counters,
    solve_ldodosp,
)
from dodosp.oracle import brute_force

from .strategies import interval_instances, schedules


def test_counters_of_two_unit_periods():
    c = counters_from_schedule(Schedule.from_rows(["101"]))
    assert c == PeriodCounters((1, 1, 2), (0, 1, 1))


def test_counters_of_trivial_schedules():
    assert counters_from_schedule(Schedule.all_off(4, 2)) == PeriodCounters((0,) * 4, (0,) * 4)
    assert counters_from_schedule(Schedule.from_rows(["111"] * 3)) == PeriodCounters((3,) * 3, (0,) * 3)


def test_hand_counters_satisfy_every_family():
    inst = Instance.exact(1, [1, 0, 1])
    c = PeriodCounters((1, 1, 2), (0, 1, 1))
    assert counter_violations(inst, c) == []
    assert counters_to_schedule(inst, c).rows() == ["101"]


def test_off_lower_bound_breaks_counters():
    inst = Instance.exact(1, [1, 0, 1], lo=2)
    assert "count. lo (d=1)" in counter_violations(inst, PeriodCounters((1, 1, 2), (0, 1, 1)))
    res = solve_counters(inst)
    assert isinstance(res, NegativeCycle)
    with pytest.raises(Infeasible):
        solve_ldodosp(inst)


def test_zero_requests_give_zero_counters():
    c = solve_counters(Instance.build(5, 2, [(0, 2)] * 5, lw=2, uw=3))
    assert not isinstance(c, NegativeCycle)
    s = counters_to_schedule(Instance.build(5, 2, [(0, 2)] * 5, lw=2, uw=3), c)
    assert check_schedule(Instance.build(5, 2, lw=2, uw=3), s).feasible


def test_all_on_counters():
    inst = Instance.exact(2, [2, 2, 2])
    assert counters_to_schedule(inst, PeriodCounters((2, 2, 2), (0, 0, 0))).rows() == ["111", "111"]


def test_solved_example_is_feasible():
    inst = Instance.exact(1, [1, 0, 1])
    s = solve_ldodosp(inst)
    assert s.rows() == ["101"]


def test_lower_bound_larger_than_horizon_rejected():
    with pytest.raises(InvalidInstance):
        Instance.exact(1, [1, 0], lw=3)


def test_invalid_counters_refused():
    with pytest.raises(ValueError):
        counters_to_schedule(Instance.exact(1, [1, 0, 1]), PeriodCounters((1, 1, 1), (0, 0, 0)))


@given(schedules(max_days=7, max_workers=3))
def test_off_counters_are_counters_of_complement(s):
    flipped = Schedule(s.days, s.workers, table=~s.table)
    assert off_counters(counters_from_schedule(s), s.workers) == counters_from_schedule(flipped)


def test_witness_names_families():
    inst = Instance.exact(1, [1, 0, 1], lo=2)
    res = solve_counters(inst)
    labels = {e.label.split(" (")[0] for e in res.edges}
    assert labels & {"count. lo", "bound. lo: S^1 = S^lo"}


@given(schedules(max_days=7, max_workers=3))
def test_counters_of_any_schedule_are_valid(s):
    # the counters of any schedule satisfy the constraints of the instance it induces
    b = {}
    inst = Instance.exact(s.workers, s.headcounts(), **b)
    c = counters_from_schedule(s)
    assert counter_violations(inst, c) == []
    rebuilt = counters_to_schedule(inst, c)
    assert rebuilt.headcounts() == s.headcounts()
    assert counters_from_schedule(rebuilt) == c


@given(interval_instances(max_days=5, totals=False))
def test_solve_matches_brute_force(inst):
    c = solve_counters(inst)
    assert (not isinstance(c, NegativeCycle)) == brute_force(inst, "decide")
    if not isinstance(c, NegativeCycle):
        s = counters_to_schedule(inst, c)
        assert check_schedule(inst, s).feasible
        assert check_fifo(s)
        assert counters_from_schedule(s) == c


@given(interval_instances(max_days=6, totals=False))
def test_potential_satisfies_graph(inst):
    c = solve_counters(inst)
    if not isinstance(c, NegativeCycle):
        assert is_feasible_potential(build_graph(inst), c.starts + c.ends, inst.workers)


def _uw_ok(s, f_uw):
    # a work period starting on day d must end before day f_uw(d)
    for row in s.row_lists():
        d = 1
        for on, grp in itertools.groupby(row):
            n = len(list(grp))
            if on and d + n - 1 > f_uw[d - 1] - 1:
                return False
            d += n
    return True


def _brute(inst, keep):
    b = inst.bounds
    base = Instance.build(inst.days, inst.workers, inst.requests, lw=b.lw, lo=b.lo)
    return any(keep(s) for s in brute_force(base, "enumerate_all"))


@given(interval_instances(max_days=5, max_workers=2, upper=False, totals=False), st.data())
def test_day_dependent_uw(inst, data):
    D = inst.days
    steps = data.draw(st.lists(st.integers(0, 2), min_size=D, max_size=D))
    f = list(itertools.accumulate(steps, initial=2))[1:]
    f = [max(v, d + 1) for d, v in enumerate(f, start=1)]
    f = list(itertools.accumulate(f, max))
    res = solve_counters(inst, BoundFunctions(uw=f))
    expected = _brute(inst, lambda s: _uw_ok(s, f))
    assert (not isinstance(res, NegativeCycle)) == expected


def test_constant_functions_reproduce_bounds():
    inst = Instance.build(6, 2, [(1, 2)] * 6, lw=2, uw=3, lo=1, uo=2)
    plain = solve_counters(inst)
    fn = solve_counters(inst, BoundFunctions(uw=lambda d: d + 3, uo=[d + 2 for d in range(1, 7)]))
    assert isinstance(plain, NegativeCycle) == isinstance(fn, NegativeCycle)


def test_function_must_not_decrease():
    inst = Instance.build(3, 1)
    with pytest.raises(ValueError):
        solve_counters(inst, BoundFunctions(uw=[3, 2, 4]))


@given(interval_instances(max_days=5, max_workers=2, upper=False, totals=False), st.integers(1, 5), st.integers(1, 5))
def test_injected_constraint(inst, d1, d2):
    D = inst.days
    d1, d2 = min(d1, D), min(d2, D)
    # as many work periods start by day d1 as by day d2
    res = solve_counters(inst, extra=[CounterConstraint("S", d2, "S", d1, 0)])

    def keep(s):
        c = counters_from_schedule(s)
        return c.S(d2) <= c.S(d1)

    assert (not isinstance(res, NegativeCycle)) == _brute(inst, keep)


def test_injected_constraint_bad_name():
    with pytest.raises(ValueError):
        solve_counters(Instance.build(2, 1), extra=[CounterConstraint("X", 1, "S", 1, 0)])
