"""Layered certificate graph: integral s-t flows of value N that encode schedules.

A vertex ``(d, shift, a, b)`` says: on day d the worker is ON/OFF, day d is
the a-th day of the current period and the worker has been on duty b times on
days 1..d.  Each worker's row is one s-t path; summing the paths gives a flow
whose throughput at the ON vertices of day d is that day's headcount.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .core import Bounds, DodospError, Instance, Schedule


class CertVertex(NamedTuple):
    day: int
    shift: str  # "ON", "OFF", or "s"/"t" for the sentinels
    run: int
    worked: int

    def __str__(self):
        if self.shift in ("s", "t"):
            return self.shift
        return f"({self.day}, {self.shift}, {self.run}, {self.worked})"


SOURCE = CertVertex(0, "s", 0, 0)


def sink(days: int) -> CertVertex:
    return CertVertex(days + 1, "t", 0, 0)


class CertificateStructureError(DodospError, ValueError):
    """The flow uses an edge that the certificate graph does not contain."""


class NoPathError(DodospError, ValueError):
    """A schedule row has no s-t path (it breaks a worker bound)."""

    def __init__(self, message: str, worker: int, day: int | None):
        super().__init__(message)
        self.worker = worker
        self.day = day


@dataclass(frozen=True)
class CertificateGraph:
    days: int
    bounds: Bounds
    successors: Mapping[CertVertex, tuple[CertVertex, ...]]

    @property
    def vertices(self):
        return self.successors.keys()

    @property
    def source(self) -> CertVertex:
        return SOURCE

    @property
    def sink(self) -> CertVertex:
        return sink(self.days)

    def has_edge(self, u: CertVertex, v: CertVertex) -> bool:
        return v in self.successors.get(u, ())

    def edges(self):
        for u, heads in self.successors.items():
            for v in heads:
                yield u, v

    def num_edges(self) -> int:
        return sum(len(h) for h in self.successors.values())


def _layer(d: int, b: Bounds):
    lo_b = max(0, d - b.Uo)
    hi_b = min(b.Uw, d)
    for a in range(1, min(b.uw, d) + 1):
        for w in range(lo_b, hi_b + 1):
            yield CertVertex(d, "ON", a, w)
    for a in range(1, min(b.uo, d) + 1):
        for w in range(lo_b, hi_b + 1):
            yield CertVertex(d, "OFF", a, w)


def _next(v: CertVertex, b: Bounds):
    d, shift, a, w = v
    if shift == "ON":
        yield CertVertex(d + 1, "ON", a + 1, w + 1)
        if a >= b.lw:
            yield CertVertex(d + 1, "OFF", 1, w)
    else:
        yield CertVertex(d + 1, "OFF", a + 1, w)
        if a >= b.lo:
            yield CertVertex(d + 1, "ON", 1, w + 1)


@lru_cache(maxsize=4096)
def _build(days: int, bounds: Bounds) -> CertificateGraph:
    b = bounds
    t = sink(days)
    layers = {1: [v for v in (CertVertex(1, "ON", 1, 1), CertVertex(1, "OFF", 1, 0)) if _admissible(v, b)]}
    for d in range(2, days + 1):
        layers[d] = list(_layer(d, b))
    succ: dict[CertVertex, tuple[CertVertex, ...]] = {SOURCE: tuple(layers[1])}
    for d in range(1, days):
        present = set(layers[d + 1])
        for v in layers[d]:
            succ[v] = tuple(u for u in _next(v, b) if u in present)
    for v in layers[days]:
        # terminal periods must already satisfy their lower bound
        done = v.run >= (b.lw if v.shift == "ON" else b.lo)
        succ[v] = (t,) if done else ()
    succ[t] = ()
    return CertificateGraph(days, b, succ)


def _admissible(v: CertVertex, b: Bounds) -> bool:
    d, shift, a, w = v
    if not max(0, d - b.Uo) <= w <= min(b.Uw, d) or a > d:
        return False
    return a <= (b.uw if shift == "ON" else b.uo)


def build_certificate_graph(instance: Instance) -> CertificateGraph:
    """Certificate graph for the instance's bounds (requests do not shape it)."""
    return _build(instance.days, instance.bounds)


@dataclass(frozen=True)
class FlowCertificate:
    """Positive edge flows keyed by ``(tail, head)``; ``value`` is the claimed worker count."""

    flow: Mapping[tuple[CertVertex, CertVertex], int]
    value: int

    def perturbed(self, edge, delta: int) -> FlowCertificate:
        flow = dict(self.flow)
        flow[edge] = flow.get(edge, 0) + delta
        if flow[edge] == 0:
            del flow[edge]
        return FlowCertificate(flow, self.value)


def certificate_violations(instance: Instance, cert: FlowCertificate) -> list[str]:
    """Reasons the certificate fails, empty if it is valid.

    Raises CertificateStructureError if a flow edge is not in the graph.
    """
    g = build_certificate_graph(instance)
    N, D = instance.workers, instance.days
    t = g.sink
    problems = []
    net: dict[CertVertex, int] = defaultdict(int)
    on_through = [0] * (D + 1)
    for (u, v), f in cert.flow.items():
        if not g.has_edge(u, v):
            raise CertificateStructureError(f"edge {u} -> {v} is not in the certificate graph")
        if not isinstance(f, int) or isinstance(f, bool):
            problems.append(f"flow on {u} -> {v} is not an integer: {f!r}")
            continue
        if f < 0:
            problems.append(f"negative flow {f} on {u} -> {v}")
        net[u] -= f
        net[v] += f
        if v.shift == "ON":
            on_through[v.day] += f
    if cert.value != N:
        problems.append(f"certificate value {cert.value} differs from N={N}")
    if -net[SOURCE] != N:
        problems.append(f"flow out of s is {-net[SOURCE]}, expected N={N}")
    if net[t] != N:
        problems.append(f"flow into t is {net[t]}, expected N={N}")
    for v, x in sorted(net.items()):
        if v in (SOURCE, t):
            continue
        if x:
            problems.append(f"flow not conserved at {v} (excess {x})")
    for d, (rl, ru) in enumerate(instance.requests, start=1):
        if not rl <= on_through[d] <= ru:
            problems.append(f"day {d}: ON throughput {on_through[d]} outside [rl={rl}, ru={ru}]")
    return problems


def verify_certificate(instance: Instance, cert: FlowCertificate) -> bool:
    return not certificate_violations(instance, cert)


def _row_path(succ, days, row, worker):
    path = [SOURCE]
    u = SOURCE
    a = w = 0
    prev = None
    for d, on in enumerate(row, start=1):
        on = bool(on)
        a = a + 1 if on == prev else 1
        w += on
        v = CertVertex(d, "ON" if on else "OFF", a, w)
        if v not in succ.get(u, ()):
            raise NoPathError(f"worker {worker} leaves the certificate graph on day {d} at {v}", worker, d)
        path.append(v)
        u = v
        prev = on
    t = sink(days)
    if t not in succ.get(u, ()):
        raise NoPathError(f"worker {worker} ends with a period shorter than its lower bound", worker, days)
    path.append(t)
    return path


def row_path(instance: Instance, row, worker: int = 1) -> list[CertVertex]:
    """The s-t path of a single worker row; raises NoPathError if it leaves the graph."""
    g = build_certificate_graph(instance)
    return _row_path(g.successors, instance.days, row, worker)


def schedule_to_flow(instance: Instance, schedule: Schedule) -> FlowCertificate:
    succ = build_certificate_graph(instance).successors
    flow: Counter = Counter()
    for worker, row in enumerate(schedule.row_lists(), start=1):
        path = _row_path(succ, instance.days, row, worker)
        flow.update(zip(path, path[1:]))
    return FlowCertificate(dict(flow), instance.workers)


def flow_to_schedule(instance: Instance, cert: FlowCertificate) -> Schedule:
    """Peel ``value`` s-t paths, always taking the smallest edge with flow left."""
    D = instance.days
    remaining: dict[CertVertex, dict[CertVertex, int]] = defaultdict(dict)
    for (u, v), f in cert.flow.items():
        if f > 0:
            remaining[u][v] = f
    order = {u: sorted(heads) for u, heads in remaining.items()}
    t = sink(D)
    rows = []
    for _ in range(cert.value):
        u = SOURCE
        row = []
        while u != t:
            left = remaining.get(u)
            nxt = None
            if left:
                for v in order[u]:
                    if left[v] > 0:
                        nxt = v
                        break
            if nxt is None:
                raise ValueError(f"flow runs dry at {u} while peeling path {len(rows) + 1}")
            left[nxt] -= 1
            if nxt != t:
                row.append(nxt.shift == "ON")
            u = nxt
        rows.append(row)
    if cert.value == 0:
        return Schedule.all_off(D, 0)
    return Schedule(D, cert.value, table=rows)


def decide_unrequested(instance: Instance) -> bool:
    """Feasibility when requests are trivial (rl = 0, ru = N): is t reachable from s?"""
    N = instance.workers
    if any(rl != 0 or ru != N for rl, ru in instance.requests):
        raise ValueError("decide_unrequested needs rl = 0 and ru = N on every day")
    if N == 0:
        return True
    g = build_certificate_graph(instance)
    seen = {SOURCE}
    stack = [SOURCE]
    while stack:
        u = stack.pop()
        for v in g.successors.get(u, ()):
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return g.sink in seen
