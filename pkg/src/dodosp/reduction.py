"""Hard instances built from Restricted 3-Partition, and partitions read back from schedules."""

from __future__ import annotations

import enum
import itertools
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .core import Instance, InvalidInstance, Schedule


@dataclass(frozen=True)
class ThreePartition:
    """3m positive integers summing to m*T, each strictly between T/4 and T/2."""

    m: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(a) for a in self.values))
        if self.m < 1:
            raise InvalidInstance(f"m must be >= 1, got {self.m}")
        if len(self.values) != 3 * self.m:
            raise InvalidInstance(f"need {3 * self.m} values for m={self.m}, got {len(self.values)}")
        total = sum(self.values)
        if total % self.m:
            raise InvalidInstance(f"sum {total} is not divisible by m={self.m}")
        T = total // self.m
        for a in self.values:
            # T/4 < a < T/2, kept in integers
            if not (4 * a > T and 2 * a < T):
                raise InvalidInstance(f"value {a} is not strictly between T/4 and T/2 (T={T})")

    @property
    def T(self) -> int:
        return sum(self.values) // self.m

    def scaled(self, k: int) -> ThreePartition:
        return ThreePartition(self.m, tuple(k * a for a in self.values))

    def is_partition(self, groups: Sequence[Sequence[int]]) -> bool:
        if sorted(x for g in groups for x in g) != sorted(self.values):
            return False
        return len(groups) == self.m and all(len(g) == 3 and sum(g) == self.T for g in groups)


class ReductionVariant(enum.Enum):
    UW_LW = "UW_LW"
    UW_LO = "UW_LO"
    UO_LO = "UO_LO"
    UO_LW = "UO_LW"
    ONESIDED_UW_UO_LW = "ONESIDED_UW_UO_LW"
    ONESIDED_UW_UO_LO = "ONESIDED_UW_UO_LO"

    @property
    def exact(self) -> bool:
        return not self.name.startswith("ONESIDED")


EXACT_VARIANTS = tuple(v for v in ReductionVariant if v.exact)
ONESIDED_VARIANTS = tuple(v for v in ReductionVariant if not v.exact)


def separator_days(tp: ThreePartition) -> list[int]:
    """Zero-request (or full) days closing each unary value block."""
    return list(itertools.accumulate(a + 1 for a in tp.values))


def value_intervals(tp: ThreePartition) -> list[tuple[int, int]]:
    """Inclusive day ranges of the unary blocks, in the order of ``tp.values``."""
    out, start = [], 1
    for a in tp.values:
        out.append((start, start + a - 1))
        start += a + 1
    return out


def encode_exact(tp: ThreePartition, variant: ReductionVariant | str) -> Instance:
    """Exact-request instance, feasible iff ``tp`` has a valid partition.

    Values are written in unary, one block per value, each block followed by a
    separator day.  Work-encoded variants request 1 on block days and 0 on
    separators; off-encoded variants request N - 1 and N.
    """
    variant = ReductionVariant(variant)
    if not variant.exact:
        raise ValueError(f"{variant.name} is a one-sided variant; use encode_onesided")
    m, T = tp.m, tp.T
    N = m
    D = m * T + 3 * m
    seps = set(separator_days(tp))
    quarter = -(-T // 4)
    if variant in (ReductionVariant.UW_LW, ReductionVariant.UO_LW):
        demand = [0 if d in seps else 1 for d in range(1, D + 1)]
    else:
        demand = [N if d in seps else N - 1 for d in range(1, D + 1)]
    bounds = {
        ReductionVariant.UW_LW: dict(Uw=T, lw=quarter),
        ReductionVariant.UW_LO: dict(Uw=D - T, lo=quarter),
        ReductionVariant.UO_LO: dict(Uo=T, lo=quarter),
        ReductionVariant.UO_LW: dict(Uo=D - T, lw=quarter),
    }[variant]
    return Instance.exact(N, demand, **bounds)


def onesided_scale(tp: ThreePartition, variant: ReductionVariant | str) -> int:
    """Smallest factor making T divisible by 4 (first variant) or even (second)."""
    variant = ReductionVariant(variant)
    need = 4 if variant is ReductionVariant.ONESIDED_UW_UO_LW else 2
    return need // math.gcd(tp.T, need)


def lw_block(a: int, N: int, lw: int, uo: int) -> list[int]:
    """Upper requests encoding one value when lw = T/4 and uo = T/2 (with both zero runs)."""
    half = [0] * uo + [N] * lw + [1] * lw + [0] * lw + [N - 1] * lw
    return half + [1] * a + half[::-1]


def lo_block(a: int, N: int, T: int) -> list[int]:
    """Upper requests encoding one value when lo = T and uo = 3T/2 + 1 (with both zero runs)."""
    uo = 3 * T // 2 + 1
    half = [0] * uo + [N, 1] + [0] * T + [N - 1] + [0] * (T // 2)
    return half + [1] * a + half[::-1]


def _concatenate(blocks: list[list[int]], zeros: int) -> list[int]:
    # each block starts and ends with `zeros` zeros; neighbours share one such run
    out = list(blocks[0])
    for b in blocks[1:]:
        out.extend(b[zeros:])
    return out


def encode_onesided(tp: ThreePartition, variant: ReductionVariant | str) -> Instance:
    """Instance with rl = 0 everywhere, feasible iff ``tp`` has a valid partition.

    ``tp`` is scaled first if T lacks the divisibility the encoding needs; the
    factor is ``onesided_scale(tp, variant)``.
    """
    variant = ReductionVariant(variant)
    if variant.exact:
        raise ValueError(f"{variant.name} has exact requests; use encode_exact")
    tp = tp.scaled(onesided_scale(tp, variant))
    N, T = tp.m, tp.T
    if variant is ReductionVariant.ONESIDED_UW_UO_LW:
        if T % 4:
            raise InvalidInstance(f"T={T} is not divisible by 4")
        lw, uo = T // 4, T // 2
        ru = _concatenate([lw_block(a, N, lw, uo) for a in tp.values], uo)
        bounds = dict(lw=lw, uo=uo, Uw=3 * tp.m * 4 * lw + T)
    else:
        if T % 2:
            raise InvalidInstance(f"T={T} is not even")
        uo = 3 * T // 2 + 1
        ru = _concatenate([lo_block(a, N, T) for a in tp.values], uo)
        bounds = dict(lo=T, uo=uo, Uw=3 * tp.m * 4 + T)
    return Instance.build(len(ru), N, [(0, r) for r in ru], **bounds)


def extract_partition(instance: Instance, schedule: Schedule, tp: ThreePartition) -> list[tuple[int, ...]]:
    """Group the values by the worker covering their block; checks it is a valid partition.

    The request on day D (always a separator) tells the encoding apart: 0
    means blocks are covered by working, N means by being off.
    """
    intervals = value_intervals(tp)
    if intervals[-1][1] + 1 != instance.days:
        raise ValueError("instance does not have the block layout of this 3-partition")
    table = schedule.table
    work_encoded = instance.requests[-1][0] == 0
    covered = table if work_encoded else ~table
    groups: dict[int, list[int]] = {}
    for a, (first, last) in zip(tp.values, intervals):
        owners = [n for n in range(schedule.workers) if covered[n, first - 1 : last].any()]
        if len(owners) != 1:
            raise RuntimeError(
                f"value block days {first}..{last} is covered by {len(owners)} workers, expected exactly one"
            )
        groups.setdefault(owners[0], []).append(a)
    out = [tuple(groups[n]) for n in sorted(groups)]
    if not tp.is_partition(out):
        raise ValueError(f"worker groups {out} are not a valid 3-partition with T={tp.T}")
    return out


def restricted_instances(m: int, max_total: int) -> Iterator[ThreePartition]:
    """Every restricted 3-partition multiset with the given m and total at most ``max_total``."""
    for T in range(1, max_total // m + 1):
        lo = T // 4 + 1
        hi = (T - 1) // 2
        if lo > hi:
            continue
        for combo in itertools.combinations_with_replacement(range(lo, hi + 1), 3 * m):
            if sum(combo) == m * T:
                yield ThreePartition(m, combo)
