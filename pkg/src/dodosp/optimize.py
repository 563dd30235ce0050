"""Optimal single bounds by binary search, and the minimal worker count."""

from __future__ import annotations

import enum
from collections.abc import Callable
from dataclasses import dataclass, field

from . import ldodosp, udodosp
from .core import ComplexityClass, Instance, classify_instance
from .diffcon import DiffConGraph, NegativeCycle, solve_potential
from .oracle import DEFAULT_LIMIT
from .solver import decide

UPPER = ("uw", "uo", "Uw", "Uo")
LOWER = ("lw", "lo")


@dataclass(frozen=True)
class BoundTarget:
    """Upper-type bounds are minimised, lower-type bounds maximised."""

    which: str

    def __post_init__(self):
        if self.which not in UPPER + LOWER:
            raise ValueError(f"unknown bound {self.which!r}; choose from {UPPER + LOWER}")

    @property
    def direction(self) -> str:
        return "minimize" if self.which in UPPER else "maximize"

    def search_range(self, instance: Instance) -> tuple[int, int]:
        """Values that keep lw <= uw and lo <= uo."""
        b, D = instance.bounds, instance.days
        return {
            "uw": (b.lw, D),
            "uo": (b.lo, D),
            "Uw": (1, D),
            "Uo": (1, D),
            "lw": (1, b.uw),
            "lo": (1, b.uo),
        }[self.which]


def optimize_bound(
    instance: Instance,
    target: BoundTarget | str,
    oracle: Callable[[Instance], bool] | None = None,
    limit: int | None = DEFAULT_LIMIT,
) -> int | None:
    """Smallest feasible upper bound or largest feasible lower bound, None if none is feasible.

    Feasibility is monotone in every bound, so a binary search over the
    admissible range suffices.  The default oracle routes each probe to the
    polynomial solvers or to size-gated brute force.
    """
    if not isinstance(target, BoundTarget):
        target = BoundTarget(target)
    if oracle is None:

        def oracle(inst):
            return decide(inst, limit)

    lo, hi = target.search_range(instance)

    def feasible(v):
        return oracle(instance.with_bounds(**{target.which: v}))

    if target.direction == "minimize":
        if not feasible(hi):
            return None
        while lo < hi:
            mid = (lo + hi) // 2
            if feasible(mid):
                hi = mid
            else:
                lo = mid + 1
        return lo
    if not feasible(lo):
        return None
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if feasible(mid):
            lo = mid
        else:
            hi = mid - 1
    return lo


class NClassification(enum.Enum):
    FEASIBLE = "FEASIBLE"
    TOO_SMALL = "TOO_SMALL"
    TOO_LARGE = "TOO_LARGE"
    INFEASIBLE_FOR_ALL = "INFEASIBLE_FOR_ALL"


def potential_graph(instance: Instance) -> DiffConGraph:
    """Parametric potential graph (worker count left symbolic) for the polynomial classes."""
    parametric = Instance(instance.days, None, instance.bounds, instance.requests)
    cls = classify_instance(instance)
    if cls is ComplexityClass.UDODOSP_POLY:
        return udodosp.build_graph(parametric)
    if cls is ComplexityClass.LDODOSP_POLY:
        return ldodosp.build_graph(parametric)
    raise ValueError(f"no potential graph for class {cls.name}")


def classify_N(graph: DiffConGraph, n: int) -> NClassification:
    """FEASIBLE, or the direction given by the sign of the cycle's coefficient on N."""
    return _classify(graph, n)[0]


def _classify(graph, n):
    res = solve_potential(graph, n)
    if not isinstance(res, NegativeCycle):
        return NClassification.FEASIBLE, None
    a = res.total.a
    if a > 0:
        return NClassification.TOO_SMALL, res
    if a < 0:
        return NClassification.TOO_LARGE, res
    return NClassification.INFEASIBLE_FOR_ALL, res


@dataclass(frozen=True)
class WorkerResult:
    workers: int | None
    classification: NClassification
    probes: tuple[tuple[int, NClassification], ...] = field(default=())
    witness: NegativeCycle | None = None


def minimize_workers(instance: Instance) -> WorkerResult:
    """Smallest N in [0, sum of rl] that admits a schedule.

    Each probe's classification tells the search which way to go; a cycle
    independent of N ends it at once.  If the range is exhausted without a
    feasible probe the answer is INFEASIBLE_FOR_ALL.
    """
    if instance.workers is not None:
        instance = Instance(instance.days, None, instance.bounds, instance.requests)
    graph = potential_graph(instance)
    lo, hi = 0, sum(instance.rl)
    best = None
    probes = []
    last_cycle = None
    while lo <= hi:
        mid = (lo + hi) // 2
        cls, cycle = _classify(graph, mid)
        probes.append((mid, cls))
        if cls is NClassification.FEASIBLE:
            best = mid
            hi = mid - 1
        elif cls is NClassification.TOO_SMALL:
            lo = mid + 1
            last_cycle = cycle
        elif cls is NClassification.TOO_LARGE:
            hi = mid - 1
            last_cycle = cycle
        else:
            return WorkerResult(None, cls, tuple(probes), cycle)
    if best is None:
        return WorkerResult(None, NClassification.INFEASIBLE_FOR_ALL, tuple(probes), last_cycle)
    return WorkerResult(best, NClassification.FEASIBLE, tuple(probes))

