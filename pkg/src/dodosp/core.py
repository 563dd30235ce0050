"""Instances, schedules, feasibility checking and complexity routing."""

from __future__ import annotations

import enum
import itertools
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

BOUND_NAMES = ("lw", "uw", "lo", "uo", "Uw", "Uo")


class DodospError(Exception):
    """Base class for errors raised by this package."""


class InvalidInstance(DodospError, ValueError):
    pass


class ScheduleShapeError(DodospError, ValueError):
    pass


class Infeasible(DodospError):
    """Raised by the constructive solvers; ``witness`` explains why."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class SizeLimitExceeded(DodospError):
    pass


class Shift(enum.Enum):
    ON = "ON"
    OFF = "OFF"


class ComplexityClass(enum.Enum):
    UDODOSP_POLY = "UDODOSP_POLY"
    LDODOSP_POLY = "LDODOSP_POLY"
    TRIVIAL_ALL_OFF = "TRIVIAL_ALL_OFF"
    GENERAL_HARD = "GENERAL_HARD"


@dataclass(frozen=True)
class Bounds:
    """Local period-length bounds (lw, uw, lo, uo) and per-worker totals (Uw, Uo)."""

    lw: int
    uw: int
    lo: int
    uo: int
    Uw: int
    Uo: int

    def as_dict(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in BOUND_NAMES}

    def replace(self, **changes: int) -> Bounds:
        values = self.as_dict()
        values.update(changes)
        return Bounds(**values)


def apply_defaults(
    bounds: Mapping[str, int | None] | None, days: int, workers: int | None = None
) -> Bounds:
    """Fill every missing bound with the value that never binds.

    Raises InvalidInstance for unknown names or explicit values outside [1, days]
    and for ``lw > uw`` / ``lo > uo``.
    """
    if days < 1:
        raise InvalidInstance(f"days must be >= 1, got {days}")
    given = dict(bounds or {})
    unknown = set(given) - set(BOUND_NAMES)
    if unknown:
        raise InvalidInstance(f"unknown bound(s): {sorted(unknown)}")
    defaults = {"lw": 1, "uw": days, "lo": 1, "uo": days, "Uw": days, "Uo": days}
    values = {}
    for name in BOUND_NAMES:
        value = given.get(name)
        if value is None:
            value = defaults[name]
        elif isinstance(value, bool) or int(value) != value:
            raise InvalidInstance(f"bound {name} must be an integer, got {value!r}")
        value = int(value)
        if not 1 <= value <= days:
            raise InvalidInstance(f"bound {name}={value} outside [1, {days}]")
        values[name] = value
    if values["lw"] > values["uw"]:
        raise InvalidInstance(f"lw={values['lw']} exceeds uw={values['uw']}")
    if values["lo"] > values["uo"]:
        raise InvalidInstance(f"lo={values['lo']} exceeds uo={values['uo']}")
    return Bounds(**values)


def _normalize_requests(requests, days: int, workers: int | None):
    if requests is None:
        return ((0, workers),) * days
    out = []
    for item in requests:
        if isinstance(item, (int, np.integer)) and not isinstance(item, bool):
            lo, hi = int(item), int(item)
        else:
            lo, hi = item
            lo = 0 if lo is None else int(lo)
            hi = workers if hi is None else int(hi)
        out.append((lo, hi))
    if len(out) != days:
        raise InvalidInstance(f"expected {days} request entries, got {len(out)}")
    return tuple(out)


@dataclass(frozen=True)
class Instance:
    """A DODOSP instance.

    ``requests`` holds one ``(rl, ru)`` pair per day.  ``workers`` may be None
    for worker-count optimisation; in that case an ``ru`` of None means "all
    workers" and is resolved by :meth:`with_workers`.
    """

    days: int
    workers: int | None
    bounds: Bounds
    requests: tuple[tuple[int, int | None], ...]

    def __post_init__(self):
        D, N = self.days, self.workers
        if D < 1:
            raise InvalidInstance(f"days must be >= 1, got {D}")
        if N is not None and N < 0:
            raise InvalidInstance(f"workers must be >= 0, got {N}")
        if len(self.requests) != D:
            raise InvalidInstance(f"expected {D} request entries, got {len(self.requests)}")
        for d, (rl, ru) in enumerate(self.requests, start=1):
            if rl < 0:
                raise InvalidInstance(f"day {d}: rl={rl} is negative")
            if ru is None:
                if N is not None:
                    raise InvalidInstance(f"day {d}: ru missing")
                continue
            if rl > ru:
                raise InvalidInstance(f"day {d}: rl={rl} exceeds ru={ru}")
            if N is not None and ru > N:
                raise InvalidInstance(f"day {d}: ru={ru} exceeds N={N}")
        b = self.bounds
        for name in BOUND_NAMES:
            if not 1 <= getattr(b, name) <= D:
                raise InvalidInstance(f"bound {name}={getattr(b, name)} outside [1, {D}]")

    @classmethod
    def build(
        cls,
        days: int,
        workers: int | None,
        requests: Iterable | None = None,
        **bounds: int | None,
    ) -> Instance:
        """Convenience constructor: defaults missing bounds, accepts exact requests as ints."""
        return cls(
            days=days,
            workers=workers,
            bounds=apply_defaults(bounds, days, workers),
            requests=_normalize_requests(requests, days, workers),
        )

    @classmethod
    def exact(cls, workers: int | None, demand: Sequence[int], **bounds: int | None) -> Instance:
        return cls.build(len(demand), workers, [int(r) for r in demand], **bounds)

    @property
    def rl(self) -> tuple[int, ...]:
        return tuple(r[0] for r in self.requests)

    @property
    def ru(self) -> tuple[int | None, ...]:
        return tuple(r[1] for r in self.requests)

    @property
    def is_exact(self) -> bool:
        return all(lo == hi for lo, hi in self.requests)

    def with_workers(self, workers: int) -> Instance:
        """Concrete copy with ``workers`` fixed; upper requests are capped at it."""
        reqs = []
        for d, (rl, ru) in enumerate(self.requests, start=1):
            hi = workers if ru is None else min(ru, workers)
            if rl > hi:
                raise InvalidInstance(f"day {d}: rl={rl} cannot be met by {workers} workers")
            reqs.append((rl, hi))
        return Instance(self.days, workers, self.bounds, tuple(reqs))

    def with_bounds(self, **changes: int) -> Instance:
        return Instance(self.days, self.workers, self.bounds.replace(**changes), self.requests)


@dataclass(frozen=True)
class Period:
    worker: int
    kind: Shift
    first_day: int
    last_day: int

    @property
    def length(self) -> int:
        return self.last_day - self.first_day + 1


class Schedule:
    """ON/OFF assignment of ``workers`` workers over ``days`` days.

    Workers and days are 1-based in the public API.  A schedule may carry the
    compact cyclic-interval form: per day an ``(offset, count)`` pair meaning
    that workers ``((offset + i - 1) mod N) + 1`` for ``i = 1..count`` are ON.
    The dense table is built lazily from it.
    """

    __slots__ = ("days", "workers", "_table", "_intervals", "_rows")

    def __init__(self, days: int, workers: int, table=None, intervals=None):
        if table is None and intervals is None:
            raise ValueError("need a table or intervals")
        self.days = int(days)
        self.workers = int(workers)
        self._table = None
        self._intervals = None
        self._rows = None
        if table is not None:
            table = np.asarray(table, dtype=bool).reshape(self.workers, self.days)
            table.setflags(write=False)
            self._table = table
        if intervals is not None:
            ivs = tuple((int(o), int(k)) for o, k in intervals)
            if len(ivs) != self.days:
                raise ScheduleShapeError(f"expected {self.days} intervals, got {len(ivs)}")
            for d, (o, k) in enumerate(ivs, start=1):
                if not 0 <= k <= self.workers:
                    raise ScheduleShapeError(f"day {d}: count {k} outside [0, {self.workers}]")
                if self.workers and not 0 <= o < self.workers:
                    raise ScheduleShapeError(f"day {d}: offset {o} outside [0, {self.workers})")
            self._intervals = ivs

    @classmethod
    def from_rows(cls, rows: Sequence) -> Schedule:
        """Build from per-worker rows, each a ``"0101"`` string or a 0/1 sequence."""
        parsed = [[c == "1" for c in r] if isinstance(r, str) else [bool(x) for x in r] for r in rows]
        if not parsed:
            raise ScheduleShapeError("from_rows needs at least one row; use all_off for N=0")
        days = len(parsed[0])
        if any(len(r) != days for r in parsed):
            raise ScheduleShapeError("rows have different lengths")
        return cls(days, len(parsed), table=parsed)

    @classmethod
    def from_intervals(cls, workers: int, intervals: Sequence[tuple[int, int]]) -> Schedule:
        return cls(len(intervals), workers, intervals=intervals)

    @classmethod
    def all_off(cls, days: int, workers: int) -> Schedule:
        return cls(days, workers, intervals=[(0, 0)] * days)

    @property
    def table(self) -> np.ndarray:
        """Dense boolean array of shape (workers, days)."""
        if self._table is None:
            N = self.workers
            if N == 0:
                table = np.zeros((0, self.days), dtype=bool)
            else:
                offs = np.array([o for o, _ in self._intervals], dtype=np.int64)
                counts = np.array([k for _, k in self._intervals], dtype=np.int64)
                w = np.arange(N, dtype=np.int64)[:, None]
                table = (w - offs[None, :]) % N < counts[None, :]
            table.setflags(write=False)
            self._table = table
        return self._table

    def row_lists(self) -> list[list[bool]]:
        if self._rows is None:
            self._rows = self.table.tolist()
        return self._rows

    @property
    def intervals(self) -> tuple[tuple[int, int], ...] | None:
        """The compact form, derived from the table when every ON set is a cyclic interval."""
        if self._intervals is None:
            self._intervals = compact_intervals(self.table)
        return self._intervals

    def is_on(self, worker: int, day: int) -> bool:
        if self._table is None:
            o, k = self._intervals[day - 1]
            # residue taken in 1..N so that full days (k == N) include everyone
            return (worker - 1 - o) % self.workers < k
        return bool(self._table[worker - 1, day - 1])

    def headcounts(self) -> list[int]:
        if self._table is None:
            return [k for _, k in self._intervals]
        return self._table.sum(axis=0).tolist()

    def workloads(self) -> list[int]:
        return self.table.sum(axis=1).tolist()

    def rows(self) -> list[str]:
        return ["".join("1" if x else "0" for x in r) for r in self.row_lists()]

    def __eq__(self, other):
        if not isinstance(other, Schedule):
            return NotImplemented
        return (
            self.days == other.days
            and self.workers == other.workers
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self):
        return hash((self.days, self.workers, self.table.tobytes()))

    def __repr__(self):
        if self.workers * self.days <= 200:
            return f"Schedule({self.rows()})"
        return f"Schedule(days={self.days}, workers={self.workers})"


def compact_intervals(table: np.ndarray) -> tuple[tuple[int, int], ...] | None:
    """Per-day ``(offset, count)`` pairs, or None if some ON set is not a cyclic interval.

    Empty and full days get offset 0.
    """
    table = np.asarray(table, dtype=bool)
    N, D = table.shape
    out = []
    for d in range(D):
        col = table[:, d]
        k = int(col.sum())
        if k == 0 or k == N:
            out.append((0, k))
            continue
        # a cyclic interval has exactly one OFF->ON transition around the circle
        starts = np.flatnonzero(col & ~np.roll(col, 1))
        if len(starts) != 1:
            return None
        out.append((int(starts[0]), k))
    return tuple(out)


def _runs(row: Sequence[bool]):
    day = 1
    for value, group in itertools.groupby(row):
        n = sum(1 for _ in group)
        yield value, day, day + n - 1
        day += n


def periods(schedule: Schedule) -> list[Period]:
    """All work and off periods, worker by worker in day order."""
    out = []
    for w, row in enumerate(schedule.row_lists(), start=1):
        for value, first, last in _runs(row):
            out.append(Period(w, Shift.ON if value else Shift.OFF, first, last))
    return out


@dataclass(frozen=True)
class Violation:
    constraint: str
    worker: int | None
    day: int | None
    detail: str = ""

    def __str__(self):
        where = []
        if self.worker is not None:
            where.append(f"worker {self.worker}")
        if self.day is not None:
            where.append(f"day {self.day}")
        return f"{self.constraint} ({', '.join(where)}): {self.detail}"


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    def __bool__(self):
        return self.feasible


def check_schedule(instance: Instance, schedule: Schedule) -> FeasibilityReport:
    """Every violated constraint of ``schedule`` for ``instance``.

    Periods touching day 1 or day D are held to the same local bounds as any
    other period.  A worker who never works has a single off period of length D.
    """
    N = instance.workers
    if N is None:
        raise ValueError("instance has no fixed worker count")
    if schedule.days != instance.days or schedule.workers != N:
        raise ScheduleShapeError(
            f"schedule is {schedule.workers}x{schedule.days}, instance is {N}x{instance.days}"
        )
    b = instance.bounds
    violations = []
    for d, (count, (rl, ru)) in enumerate(zip(schedule.headcounts(), instance.requests), start=1):
        if count < rl:
            violations.append(Violation("request_low", None, d, f"{count} on duty < rl={rl}"))
        elif count > ru:
            violations.append(Violation("request_high", None, d, f"{count} on duty > ru={ru}"))
    D = instance.days
    for w, row in enumerate(schedule.row_lists(), start=1):
        worked = 0
        for on, first, last in _runs(row):
            n = last - first + 1
            if on:
                worked += n
                if n < b.lw:
                    violations.append(Violation("work_min", w, first, f"work period of {n} < lw={b.lw}"))
                if n > b.uw:
                    violations.append(Violation("work_max", w, first, f"work period of {n} > uw={b.uw}"))
            else:
                if n < b.lo:
                    violations.append(Violation("off_min", w, first, f"off period of {n} < lo={b.lo}"))
                if n > b.uo:
                    violations.append(Violation("off_max", w, first, f"off period of {n} > uo={b.uo}"))
        if worked > b.Uw:
            violations.append(Violation("total_work", w, None, f"{worked} days on > Uw={b.Uw}"))
        if D - worked > b.Uo:
            violations.append(Violation("total_off", w, None, f"{D - worked} days off > Uo={b.Uo}"))
    return FeasibilityReport(not violations, tuple(violations))


def check_fifo(schedule: Schedule) -> bool:
    """True iff, per period kind, an earlier start never comes with a later end."""
    by_kind: dict[bool, dict[int, list[int]]] = {True: {}, False: {}}
    for row in schedule.row_lists():
        for on, first, last in _runs(row):
            by_kind[on].setdefault(first, []).append(last)
    for starts in by_kind.values():
        latest_end = -1
        for first in sorted(starts):
            ends = starts[first]
            if min(ends) < latest_end:
                return False
            latest_end = max(latest_end, max(ends))
    return True


def classify_instance(instance: Instance) -> ComplexityClass:
    b, D = instance.bounds, instance.days
    if b.lw == 1 and b.lo == 1:
        return ComplexityClass.UDODOSP_POLY
    if b.Uw == D and b.Uo == D:
        return ComplexityClass.LDODOSP_POLY
    if all(rl == 0 for rl, _ in instance.requests) and b.uo == D and b.Uo == D:
        return ComplexityClass.TRIVIAL_ALL_OFF
    return ComplexityClass.GENERAL_HARD
