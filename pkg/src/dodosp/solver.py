"""Route an instance to the strongest applicable method."""

from __future__ import annotations

from dataclasses import dataclass

from . import ldodosp, udodosp
from .core import ComplexityClass, Instance, Schedule, SizeLimitExceeded, classify_instance
from .diffcon import DiffConGraph, NegativeCycle
from .oracle import DEFAULT_LIMIT, brute_force

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
UNDECIDED = "undecided"


@dataclass(frozen=True)
class SolveResult:
    status: str
    method: ComplexityClass
    schedule: Schedule | None = None
    witness: NegativeCycle | None = None
    graph: DiffConGraph | None = None
    detail: str = ""

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE

    def witness_lines(self) -> list[str]:
        if self.witness is None or self.graph is None:
            return []
        return self.witness.describe(self.graph)


def solve(instance: Instance, limit: int | None = DEFAULT_LIMIT) -> SolveResult:
    """Polynomial algorithm when the bounds allow one, brute force (size-gated) otherwise.

    Never raises for infeasible or oversized instances; the status says what happened.
    """
    if instance.workers is None:
        raise ValueError("solve needs a fixed worker count; see optimize.minimize_workers")
    cls = classify_instance(instance)
    D, N = instance.days, instance.workers
    if cls is ComplexityClass.UDODOSP_POLY:
        W = udodosp.solve_intervals(instance)
        if isinstance(W, NegativeCycle):
            return SolveResult(INFEASIBLE, cls, witness=W, graph=udodosp.build_graph(instance))
        demand = [W[d] - W[d - 1] for d in range(1, D + 1)]
        return SolveResult(FEASIBLE, cls, schedule=udodosp.round_robin_schedule(N, demand))
    if cls is ComplexityClass.LDODOSP_POLY:
        c = ldodosp.solve_counters(instance)
        if isinstance(c, NegativeCycle):
            return SolveResult(INFEASIBLE, cls, witness=c, graph=ldodosp.build_graph(instance))
        return SolveResult(FEASIBLE, cls, schedule=ldodosp.counters_to_schedule(instance, c))
    if cls is ComplexityClass.TRIVIAL_ALL_OFF:
        return SolveResult(FEASIBLE, cls, schedule=Schedule.all_off(D, N))
    try:
        found = brute_force(instance, "find_one", limit=limit)
    except SizeLimitExceeded as exc:
        return SolveResult(UNDECIDED, cls, detail=str(exc))
    if found is None:
        return SolveResult(INFEASIBLE, cls, detail="exhaustive search found no schedule")
    return SolveResult(FEASIBLE, cls, schedule=found)


def decide(instance: Instance, limit: int | None = DEFAULT_LIMIT) -> bool:
    """Feasibility as a bool; raises SizeLimitExceeded when the hard case is too large."""
    res = solve(instance, limit)
    if res.status == UNDECIDED:
        raise SizeLimitExceeded(res.detail)
    return res.feasible
