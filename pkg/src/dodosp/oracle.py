"""Exhaustive search for small instances.

The search walks day by day; each worker carries (shift, run length, days
worked), the same information as a certificate-graph vertex.  Dead states are
memoised on the sorted tuple of worker states, which is sound because workers
are interchangeable; the key includes the day because the remaining
horizon decides which states can still finish.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from functools import lru_cache

from .core import Instance, Schedule, SizeLimitExceeded

DEFAULT_LIMIT = 24

MODES = ("decide", "find_one", "enumerate_all")


def _check_gate(instance: Instance, limit: int | None) -> None:
    if instance.workers is None:
        raise ValueError("brute force needs a fixed worker count")
    if limit is not None and instance.workers * instance.days > limit:
        raise SizeLimitExceeded(
            f"N*D = {instance.workers * instance.days} exceeds the brute-force limit {limit}"
        )


class _Search:
    def __init__(self, instance: Instance, symmetric: bool):
        self.inst = instance
        self.N = instance.workers
        self.D = instance.days
        b = instance.bounds
        self.b = b
        self.symmetric = symmetric
        D = self.D
        # run lengths beyond these caps behave identically for the remaining search
        self.on_cap = b.uw if b.uw < D else b.lw
        self.off_cap = b.uo if b.uo < D else b.lo
        self.track_total = b.Uw < D or b.Uo < D
        self.dead: set = set()

    def _moves(self, state, d):
        """Successor states for going ON / OFF on day d + 1 (None if not allowed)."""
        on, a, worked = state
        b = self.b
        off_days = d - worked
        if on:
            go_on = (True, a + 1, worked + 1) if a < b.uw and worked < b.Uw else None
            go_off = (False, 1, worked) if a >= b.lw and off_days < b.Uo else None
        else:
            go_on = (True, 1, worked + 1) if a >= b.lo and worked < b.Uw else None
            go_off = (False, a + 1, worked) if a < b.uo and off_days < b.Uo else None
        return go_on, go_off

    def _key(self, d, states):
        on_cap, off_cap, track = self.on_cap, self.off_cap, self.track_total
        return (d, *sorted((on, min(a, on_cap if on else off_cap), w if track else 0) for on, a, w in states))

    def _day_choices(self, options, rl, ru, ties):
        """Yield the ON-worker sets allowed for one day."""
        forced_on = [i for i, (on, off) in enumerate(options) if off is None]
        free = [i for i, (on, off) in enumerate(options) if on is not None and off is not None]
        lo = max(rl - len(forced_on), 0)
        hi = min(ru - len(forced_on), len(free))
        for k in range(lo, hi + 1):
            for chosen in itertools.combinations(free, k):
                on_set = set(forced_on)
                on_set.update(chosen)
                if ties is not None and any(
                    ties[i] and (i not in on_set) and (i + 1 in on_set) for i in range(len(ties))
                ):
                    continue
                yield on_set

    def run(self, stop_at_first: bool) -> Iterator[list[list[bool]]]:
        N = self.N
        if N == 0:
            if all(rl == 0 for rl, _ in self.inst.requests):
                yield []
            return
        yield from self._search(stop_at_first)

    def _expand(self, d, states, ties):
        """Frame for day d + 1 given the states of day d, or None if dead."""
        if d == 0:
            options = [((True, 1, 1), (False, 1, 0))] * self.N
            key = None
        else:
            key = self._key(d, states)
            if key in self.dead:
                return None
            options = []
            for st in states:
                opt = self._moves(st, d)
                if opt[0] is None and opt[1] is None:
                    self.dead.add(key)
                    return None
                options.append(opt)
        rl, ru = self.inst.requests[d]
        return [d, options, self._day_choices(options, rl, ru, ties), key, False, ties]

    def _search(self, stop_at_first):
        # explicit stack: one frame per fixed day, so long horizons do not recurse
        N, D, b = self.N, self.D, self.b
        rows = [[] for _ in range(N)]
        root = self._expand(0, None, [True] * (N - 1) if self.symmetric else None)
        stack = [root]
        while stack:
            frame = stack[-1]
            d, options, choices, key, _, ties = frame
            if len(rows[0]) > d:
                for r in rows:
                    r.pop()
            on_set = next(choices, None)
            if on_set is None:
                stack.pop()
                if not frame[4] and key is not None and ties is None:
                    self.dead.add(key)
                elif frame[4] and stack:
                    stack[-1][4] = True
                continue
            states = [options[i][0] if i in on_set else options[i][1] for i in range(N)]
            for i in range(N):
                rows[i].append(i in on_set)
            new_ties = None
            if ties is not None:
                new_ties = [t and ((i in on_set) == (i + 1 in on_set)) for i, t in enumerate(ties)]
            if d + 1 == D:
                if all((a >= b.lw) if on else (a >= b.lo) for on, a, _ in states):
                    for f in stack:
                        f[4] = True
                    yield [list(r) for r in rows]
                    if stop_at_first:
                        return
                continue
            child = self._expand(d + 1, states, new_ties)
            if child is not None:
                stack.append(child)

def brute_force(
    instance: Instance,
    mode: str = "decide",
    limit: int | None = DEFAULT_LIMIT,
    symmetric: bool = False,
):
    """Exhaustive search.

    ``decide`` returns a bool, ``find_one`` a Schedule or None and
    ``enumerate_all`` a list of every feasible schedule.  With
    ``symmetric=True`` only schedules whose rows are in canonical order
    (a worker never works where an identical-so-far predecessor is off) are
    listed.  Raises SizeLimitExceeded when N*D exceeds ``limit``.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    _check_gate(instance, limit)
    D, N = instance.days, instance.workers
    search = _Search(instance, symmetric)
    if mode == "enumerate_all":
        return [_to_schedule(rows, D, N) for rows in search.run(stop_at_first=False)]
    first = next(search.run(stop_at_first=True), None)
    if mode == "decide":
        return first is not None
    return None if first is None else _to_schedule(first, D, N)


def _to_schedule(rows, days, workers) -> Schedule:
    if workers == 0:
        return Schedule.all_off(days, 0)
    return Schedule(days, workers, table=rows)


def count_schedules(instance: Instance, limit: int | None = DEFAULT_LIMIT) -> int:
    return sum(1 for _ in brute_force(instance, "enumerate_all", limit))


# --- profile tables -------------------------------------------------------
#
# For exhaustive sweeps over all bound combinations it is cheaper to enumerate
# every multiset of worker rows once and record, per request vector, the
# bounds each multiset needs.  A bound combination is feasible iff some
# recorded profile fits inside it.


def _row_stats(row: tuple[int, ...]):
    on_runs, off_runs = [], []
    for value, group in itertools.groupby(row):
        (on_runs if value else off_runs).append(sum(1 for _ in group))
    D = len(row)
    inf = D + 1
    worked = sum(row)
    return (
        min(on_runs, default=inf),
        max(on_runs, default=0),
        min(off_runs, default=inf),
        max(off_runs, default=0),
        worked,
        D - worked,
    )


@lru_cache(maxsize=None)
def schedule_profiles(days: int, workers: int) -> dict[tuple[int, ...], frozenset]:
    """Map each headcount vector to the set of profiles of schedules producing it.

    A profile is ``(min work run, max work run, min off run, max off run,
    max days worked, max days off)`` over all workers; a missing run kind
    contributes ``D + 1`` to the minimum and 0 to the maximum.
    """
    rows = list(itertools.product((0, 1), repeat=days))
    stats = [_row_stats(r) for r in rows]
    out: dict[tuple[int, ...], set] = {}
    if workers == 0:
        return {(0,) * days: frozenset({(days + 1, 0, days + 1, 0, 0, 0)})}
    for combo in itertools.combinations_with_replacement(range(len(rows)), workers):
        demand = tuple(map(sum, zip(*(rows[i] for i in combo))))
        ss = [stats[i] for i in combo]
        prof = (
            min(s[0] for s in ss),
            max(s[1] for s in ss),
            min(s[2] for s in ss),
            max(s[3] for s in ss),
            max(s[4] for s in ss),
            max(s[5] for s in ss),
        )
        out.setdefault(demand, set()).add(prof)
    return {k: frozenset(_pareto(v)) for k, v in out.items()}


def _pareto(profiles):
    """Drop profiles that need strictly more than another one in every coordinate."""

    def needs_less(p, q):
        # p fits wherever q fits
        return p[0] >= q[0] and p[1] <= q[1] and p[2] >= q[2] and p[3] <= q[3] and p[4] <= q[4] and p[5] <= q[5]

    profiles = list(profiles)
    keep = []
    for i, p in enumerate(profiles):
        if not any(j != i and needs_less(q, p) and q != p for j, q in enumerate(profiles)):
            keep.append(p)
    return keep


def profile_feasible(profiles, lw, uw, lo, uo, Uw, Uo) -> bool:
    for p in profiles:
        if p[0] >= lw and p[1] <= uw and p[2] >= lo and p[3] <= uo and p[4] <= Uw and p[5] <= Uo:
            return True
    return False


def decide_by_profiles(instance: Instance) -> bool:
    """Exact-request feasibility from the exhaustive profile table."""
    if not instance.is_exact:
        raise ValueError("profile tables cover exact requests only")
    table = schedule_profiles(instance.days, instance.workers)
    b = instance.bounds
    return profile_feasible(table.get(instance.rl, ()), b.lw, b.uw, b.lo, b.uo, b.Uw, b.Uo)


def find_three_partition(values, m: int):
    """Brute-force search for m triples of equal sum; returns a list of triples or None."""
    values = list(values)
    if len(values) != 3 * m or sum(values) % m:
        return None
    target = sum(values) // m

    def rec(remaining):
        if not remaining:
            return []
        first, rest = remaining[0], remaining[1:]
        for i, j in itertools.combinations(range(len(rest)), 2):
            if first + rest[i] + rest[j] == target:
                left = [x for k, x in enumerate(rest) if k not in (i, j)]
                sub = rec(left)
                if sub is not None:
                    return [(first, rest[i], rest[j]), *sub]
        return None

    return rec(sorted(values))
