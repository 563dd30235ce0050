"""Instances without global bounds (Uw = Uo = D), solved through period counters.

S^d counts work periods starting on days <= d and T^d counts work periods
ending on days <= d - 1.  Feasible counters are exactly the integral
solutions of a difference-constraint system; a FIFO schedule is read off by
letting representative j work on the days d with T^d < j <= S^d.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

from .core import Infeasible, Instance, Schedule
from .diffcon import DiffConGraph, NegativeCycle, Potential, solve_potential


@dataclass(frozen=True)
class PeriodCounters:
    starts: tuple[int, ...]
    ends: tuple[int, ...]

    def __post_init__(self):
        if len(self.starts) != len(self.ends):
            raise ValueError("starts and ends differ in length")

    @property
    def days(self) -> int:
        return len(self.starts)

    def S(self, d: int) -> int:
        return self.starts[d - 1]

    def T(self, d: int) -> int:
        return self.ends[d - 1]


def off_counters(counters: PeriodCounters, workers: int) -> PeriodCounters:
    """The same schedule counted by off periods instead of work periods."""
    s1 = counters.starts[0]
    return PeriodCounters(
        starts=tuple(t + workers - s1 for t in counters.ends),
        ends=tuple(s - s1 for s in counters.starts),
    )


BoundFunction = Callable[[int], int] | Sequence[int]


@dataclass(frozen=True)
class BoundFunctions:
    """Day-dependent replacements for ``d + lw``, ``d + uw``, ``d + lo`` and ``d + uo``.

    Each entry is None (keep the constant bound), a callable on days 1..D, or a
    sequence of D values.  Values must be non-decreasing; a value above D
    drops the constraint for that day.
    """

    lw: BoundFunction | None = None
    uw: BoundFunction | None = None
    lo: BoundFunction | None = None
    uo: BoundFunction | None = None

    def table(self, name: str, days: int, default: int) -> list[int]:
        f = getattr(self, name)
        if f is None:
            return [d + default for d in range(1, days + 1)]
        vals = [int(f(d)) for d in range(1, days + 1)] if callable(f) else [int(x) for x in f]
        if len(vals) != days:
            raise ValueError(f"f_{name} has {len(vals)} values for {days} days")
        if any(b < a for a, b in zip(vals, vals[1:])):
            raise ValueError(f"f_{name} must be non-decreasing")
        if any(v < 1 for v in vals):
            raise ValueError(f"f_{name} values must be >= 1")
        return vals


@dataclass(frozen=True)
class CounterConstraint:
    """Extra constraint ``X^{day1} - Y^{day2} <= a*N + b`` with X, Y in {"S", "T"}."""

    x: str
    day1: int
    y: str
    day2: int
    b: int
    a: int = 0


def counters_from_schedule(schedule: Schedule) -> PeriodCounters:
    D = schedule.days
    start_on = [0] * (D + 2)
    end_on = [0] * (D + 2)
    for row in schedule.row_lists():
        prev = False
        for d, on in enumerate(row, start=1):
            if on and not prev:
                start_on[d] += 1
            if prev and not on:
                end_on[d - 1] += 1
            prev = on
    S, T = [], []
    s = t = 0
    for d in range(1, D + 1):
        s += start_on[d]
        S.append(s)
        T.append(t)  # periods ending on days <= d - 1
        t += end_on[d]
    return PeriodCounters(tuple(S), tuple(T))


def _namer(D: int):
    def name(i):
        return f"S{i + 1}" if i < D else f"T{i - D + 1}"

    return name


def build_graph(
    instance: Instance,
    functions: BoundFunctions | None = None,
    extra: Sequence[CounterConstraint] = (),
) -> DiffConGraph:
    """Potential graph on S^1..S^D (vertices 0..D-1) and T^1..T^D (vertices D..2D-1)."""
    D, b = instance.days, instance.bounds
    g = DiffConGraph(2 * D, _namer(D))
    add = g.add
    # vertex of S^d is d - 1, of T^d is D + d - 1; X - Y <= aN + c is the edge Y -> X
    T0 = D - 1
    for d in range(1, D):
        add(d, d - 1, 0, 0, "non decr. S", d)  # S^d <= S^{d+1}
        add(T0 + d + 1, T0 + d, 0, 0, "non decr. T", d)
        add(d - 1, T0 + d + 1, 0, 0, "pos. work", d)  # T^{d+1} <= S^d
        add(T0 + d, d, 1, 0, "pos. off", d)  # S^{d+1} <= T^d + N

    def equal(x, y, label):
        add(y, x, 0, 0, label)
        add(x, y, 0, 0, label)

    equal(T0 + b.lw, T0 + 1, "bound. lw: T^lw = 0")
    equal(D - 1, D - b.lw, "bound. lw: S^(D-lw+1) = S^D")
    equal(b.lo - 1, 0, "bound. lo: S^1 = S^lo")
    equal(T0 + D, T0 + D - b.lo + 1, "bound. lo: T^(D-lo+1) = T^D")

    if functions is None:
        f_lw = f_uw = f_lo = f_uo = None
    else:
        f_lw = functions.table("lw", D, b.lw)
        f_uw = functions.table("uw", D, b.uw)
        f_lo = functions.table("lo", D, b.lo)
        f_uo = functions.table("uo", D, b.uo)
    for d in range(1, D + 1):
        x = d + b.lw if f_lw is None else f_lw[d - 1]
        if x <= D:
            add(d - 1, T0 + x, 0, 0, "count. lw", d)  # T^{f(d)} <= S^d
        x = d + b.uw if f_uw is None else f_uw[d - 1]
        if x <= D:
            add(T0 + x, d - 1, 0, 0, "count. uw", d)  # S^d <= T^{f(d)}
        x = d + b.lo if f_lo is None else f_lo[d - 1]
        if x <= D:
            add(T0 + d, x - 1, 1, 0, "count. lo", d)  # S^{f(d)} <= T^d + N
        x = d + b.uo if f_uo is None else f_uo[d - 1]
        if x <= D:
            add(x - 1, T0 + d, -1, 0, "count. uo", d)  # T^d <= S^{f(d)} - N

    parametric = instance.workers is None
    for d, (rl, ru) in enumerate(instance.requests, start=1):
        add(d - 1, T0 + d, 0, -rl, "count. req. rl", d)  # T^d <= S^d - rl
        if ru is not None:
            add(T0 + d, d - 1, 0, ru, "count. req. ru", d)  # S^d <= T^d + ru
        if parametric:
            add(T0 + d, d - 1, 1, 0, "headcount <= N", d)

    for c in extra:
        if c.x not in ("S", "T") or c.y not in ("S", "T"):
            raise ValueError(f"counter names must be 'S' or 'T', got {c.x!r}, {c.y!r}")
        if not (1 <= c.day1 <= D and 1 <= c.day2 <= D):
            raise ValueError(f"constraint days outside [1, {D}]: {c}")
        x = c.day1 - 1 + (D if c.x == "T" else 0)
        y = c.day2 - 1 + (D if c.y == "T" else 0)
        add(y, x, c.a, c.b, f"user {c.x}{c.day1} - {c.y}{c.day2}")
    return g


def solve_counters(
    instance: Instance,
    functions: BoundFunctions | None = None,
    extra: Sequence[CounterConstraint] = (),
) -> PeriodCounters | NegativeCycle:
    """Feasible period counters anchored at T^1 = 0, or a negative cycle.

    Global bounds Uw and Uo are not represented and therefore ignored.
    """
    if instance.workers is None:
        raise ValueError("solve_counters needs a fixed worker count")
    D = instance.days
    res = solve_potential(build_graph(instance, functions, extra), instance.workers, anchor=D)
    if isinstance(res, Potential):
        return PeriodCounters(res.values[:D], res.values[D:])
    return res


def counter_violations(instance: Instance, counters: PeriodCounters) -> list[str]:
    """Inequalities of the two counter conditions violated by ``counters``."""
    D, N, b = instance.days, instance.workers, instance.bounds
    if counters.days != D:
        return [f"counters cover {counters.days} days, instance has {D}"]
    S, T = counters.S, counters.T
    bad = []
    if T(1) != 0:
        bad.append("T^1 = 0")
    for d in range(1, D):
        if S(d) > S(d + 1) or T(d) > T(d + 1):
            bad.append(f"non decr. (d={d})")
        if T(d + 1) > S(d):
            bad.append(f"pos. work (d={d})")
        if S(d + 1) > T(d) + N:
            bad.append(f"pos. off (d={d})")
    if T(b.lw) != 0 or S(D - b.lw + 1) != S(D):
        bad.append("bound. lw")
    if S(1) != S(b.lo) or T(D - b.lo + 1) != T(D):
        bad.append("bound. lo")
    for d in range(1, D - b.lw + 1):
        if T(d + b.lw) > S(d):
            bad.append(f"count. lw (d={d})")
    for d in range(1, D - b.uw + 1):
        if S(d) > T(d + b.uw):
            bad.append(f"count. uw (d={d})")
    for d in range(1, D - b.lo + 1):
        if S(d + b.lo) - N > T(d):
            bad.append(f"count. lo (d={d})")
    for d in range(1, D - b.uo + 1):
        if T(d) + N > S(d + b.uo):
            bad.append(f"count. uo (d={d})")
    for d, (rl, ru) in enumerate(instance.requests, start=1):
        if not rl <= S(d) - T(d) <= ru:
            bad.append(f"count. req. (d={d})")
    return bad


def counters_to_schedule(instance: Instance, counters: PeriodCounters) -> Schedule:
    """Representatives T^d+1 .. S^d work on day d (compact offset T^d mod N)."""
    bad = counter_violations(instance, counters)
    if bad:
        raise ValueError(f"invalid period counters: {', '.join(bad)}")
    N = instance.workers
    if N == 0:
        return Schedule.all_off(instance.days, 0)
    return Schedule.from_intervals(N, [(t % N, s - t) for s, t in zip(counters.starts, counters.ends)])


def solve_ldodosp(instance: Instance) -> Schedule:
    """Feasible FIFO schedule in compact form, or Infeasible carrying the negative cycle."""
    c = solve_counters(instance)
    if isinstance(c, NegativeCycle):
        raise Infeasible("no period counters satisfy the local bounds", witness=c)
    N = instance.workers
    if N == 0:
        return Schedule.all_off(instance.days, 0)
    return Schedule.from_intervals(N, [(t % N, s - t) for s, t in zip(c.starts, c.ends)])
