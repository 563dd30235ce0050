"""Instances with only upper bounds (lw = lo = 1).

Exact requests are decided by four window inequalities on the prefix sums
R^d and scheduled by handing out work days to workers round-robin.  Request
intervals are first narrowed to exact headcounts through a potential graph on
the prefix sums W^0..W^D.
"""

from __future__ import annotations

from itertools import accumulate

from .core import Infeasible, Instance, Schedule
from .diffcon import DiffConGraph, NegativeCycle, Potential, solve_potential


def _require_upper_only(instance: Instance) -> None:
    b = instance.bounds
    if b.lw != 1 or b.lo != 1:
        raise ValueError(f"needs lw = lo = 1, got lw={b.lw}, lo={b.lo}")


def prefix_requests(demand) -> list[int]:
    """R^0..R^D with R^0 = 0."""
    return [0, *accumulate(demand)]


def exact_violations(instance: Instance) -> list[str]:
    """Which of the four window inequalities fail, as ``"family@d"`` tags."""
    if not instance.is_exact:
        raise ValueError("check_exact needs exact requests (rl == ru on every day)")
    _require_upper_only(instance)
    N, D, b = instance.workers, instance.days, instance.bounds
    R = prefix_requests(instance.rl)
    bad = []
    if R[D] > N * b.Uw:
        bad.append("Uw")
    if N * D - R[D] > N * b.Uo:
        bad.append("Uo")
    cap = N * b.uw
    for d in range(1, D - b.uw + 1):
        if R[d + b.uw] - R[d - 1] > cap:
            bad.append(f"uw@{d}")
    for d in range(1, D - b.uo + 1):
        if R[d + b.uo] - R[d - 1] < N:
            bad.append(f"uo@{d}")
    return bad


def check_exact(instance: Instance) -> bool:
    """O(D) feasibility test for exact requests."""
    if not instance.is_exact:
        raise ValueError("check_exact needs exact requests (rl == ru on every day)")
    _require_upper_only(instance)
    N, D, b = instance.workers, instance.days, instance.bounds
    R = prefix_requests(instance.rl)
    if R[D] > N * b.Uw or N * D - R[D] > N * b.Uo:
        return False
    uw, uo = b.uw, b.uo
    cap = N * uw
    for d in range(1, D - uw + 1):
        if R[d + uw] - R[d - 1] > cap:
            return False
    for d in range(1, D - uo + 1):
        if R[d + uo] - R[d - 1] < N:
            return False
    return True


def round_robin_schedule(workers: int, demand) -> Schedule:
    """Day d staffs representatives R^{d-1}+1 .. R^d, i.e. offset R^{d-1} mod N."""
    N = workers
    R = prefix_requests(demand)
    if N == 0:
        return Schedule.all_off(len(demand), 0)
    return Schedule.from_intervals(N, [(R[d] % N, r) for d, r in enumerate(demand)])


def schedule_exact(instance: Instance) -> Schedule:
    """Compact round-robin schedule; raises Infeasible when the inequalities fail."""
    bad = exact_violations(instance)
    if bad:
        raise Infeasible(f"window inequalities fail: {', '.join(bad)}", witness=bad)
    return round_robin_schedule(instance.workers, instance.rl)


def build_graph(instance: Instance) -> DiffConGraph:
    """Potential graph on W^0..W^D (vertex d is W^d).

    If the instance has no fixed worker count, every day also gets a
    ``W^d - W^{d-1} <= N`` edge so the graph stays exact for any N.
    """
    D, b = instance.days, instance.bounds
    g = DiffConGraph(D + 1, lambda i: f"W{i}")
    g.add(0, D, b.Uw, 0, "total work Uw")
    g.add(D, 0, b.Uo - D, 0, "total off Uo")
    for d in range(1, D - b.uw + 1):
        g.add(d - 1, d + b.uw, b.uw, 0, "window uw", d)
    for d in range(1, D - b.uo + 1):
        g.add(d + b.uo, d - 1, -1, 0, "window uo", d)
    parametric = instance.workers is None
    for d, (rl, ru) in enumerate(instance.requests, start=1):
        g.add(d, d - 1, 0, -rl, "request rl", d)
        if ru is not None:
            g.add(d - 1, d, 0, ru, "request ru", d)
        if parametric:
            g.add(d - 1, d, 1, 0, "headcount <= N", d)
    return g


def solve_intervals(instance: Instance) -> tuple[int, ...] | NegativeCycle:
    """Prefix headcounts W^0..W^D with W^0 = 0, or a negative cycle."""
    _require_upper_only(instance)
    if instance.workers is None:
        raise ValueError("solve_intervals needs a fixed worker count")
    res = solve_potential(build_graph(instance), instance.workers, anchor=0)
    if isinstance(res, Potential):
        return res.values
    return res


def solve_udodosp(instance: Instance) -> Schedule:
    """Feasible compact schedule, or Infeasible carrying the negative cycle."""
    W = solve_intervals(instance)
    if isinstance(W, NegativeCycle):
        raise Infeasible("no headcounts satisfy the window inequalities", witness=W)
    demand = [W[d] - W[d - 1] for d in range(1, instance.days + 1)]
    return round_robin_schedule(instance.workers, demand)
