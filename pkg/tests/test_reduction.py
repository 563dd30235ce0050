import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dodosp.core import Instance, InvalidInstance, Schedule, check_schedule
from dodosp.oracle import brute_force, find_three_partition
from dodosp.reduction import (
    EXACT_VARIANTS,
    ONESIDED_VARIANTS,
    ReductionVariant,
    ThreePartition,
    encode_exact,
    encode_onesided,
    extract_partition,
    lo_block,
    lw_block,
    onesided_scale,
    restricted_instances,
    separator_days,
)

from .conftest import PACKING_ROWS

PACKING = ThreePartition(2, (3, 3, 3, 4, 4, 5))
YES = ThreePartition(2, (4, 4, 5, 4, 4, 5))
NO = ThreePartition(2, (4, 4, 4, 4, 4, 6))


def _zero_days(inst):
    return [d for d, (rl, _) in enumerate(inst.requests, start=1) if rl == 0]


def test_validation():
    assert PACKING.T == 11
    for values in [(3, 4, 5), (1, 2, 3), (4, 4, 4, 4)]:
        with pytest.raises(InvalidInstance):
            ThreePartition(1, values)


def test_packing_encoding():
    inst = encode_exact(PACKING, "UW_LW")
    assert (inst.days, inst.workers) == (28, 2)
    assert (inst.bounds.Uw, inst.bounds.lw) == (11, 3)
    assert _zero_days(inst) == [4, 8, 12, 17, 22, 28] == separator_days(PACKING)
    assert inst.is_exact and set(inst.rl) == {0, 1}


def test_off_global_variant_keeps_shape():
    inst = encode_exact(PACKING, ReductionVariant.UO_LW)
    assert _zero_days(inst) == [4, 8, 12, 17, 22, 28]
    assert (inst.bounds.Uo, inst.bounds.lw, inst.bounds.Uw) == (17, 3, 28)


@pytest.mark.parametrize("variant", ["UW_LO", "UO_LO"])
def test_off_encoded_variants_complement(variant):
    inst = encode_exact(PACKING, variant)
    full = [d for d, (rl, _) in enumerate(inst.requests, start=1) if rl == 2]
    assert full == separator_days(PACKING)
    assert set(inst.rl) == {1, 2}
    assert inst.bounds.lo == 3


@pytest.mark.parametrize("variant", EXACT_VARIANTS)
def test_single_container_is_feasible(variant):
    tp = ThreePartition(1, (4, 4, 5))
    inst = encode_exact(tp, variant)
    s = brute_force(inst, "find_one", limit=None)
    assert s is not None
    assert extract_partition(inst, s, tp) == [(4, 4, 5)]


def test_packing_schedule_extracts_stated_partition():
    inst = encode_exact(PACKING, "UW_LW")
    s = Schedule.from_rows(PACKING_ROWS)
    assert check_schedule(inst, s).feasible
    assert extract_partition(inst, s, PACKING) == [(3, 3, 5), (3, 4, 4)]


def test_extract_rejects_split_block():
    inst = encode_exact(PACKING, "UW_LW")
    rows = [PACKING_ROWS[0][:1] + "0" + PACKING_ROWS[0][2:], PACKING_ROWS[1][:1] + "1" + PACKING_ROWS[1][2:]]
    with pytest.raises(RuntimeError):
        extract_partition(inst, Schedule.from_rows(rows), PACKING)


def test_restricted_listing():
    tps = list(restricted_instances(2, 30))
    assert len(tps) == 21
    assert sorted(tp.values for tp in tps if find_three_partition(tp.values, 2) is None) == [
        (4, 4, 4, 4, 4, 6),
        (4, 4, 4, 6, 6, 6),
    ]


@pytest.mark.parametrize("variant", EXACT_VARIANTS)
@pytest.mark.parametrize("tp", [YES, NO], ids=["yes", "no"])
def test_exact_variants_sound(variant, tp):
    inst = encode_exact(tp, variant)
    s = brute_force(inst, "find_one", limit=None)
    assert (s is not None) == (find_three_partition(tp.values, tp.m) is not None)
    if s is not None:
        assert tp.is_partition(extract_partition(inst, s, tp))


@given(st.integers(0, 2**31))
def test_extracted_partitions_are_checked_independently(seed):
    tps = list(restricted_instances(2, 30))
    tp = random.Random(seed).choice(tps)
    inst = encode_exact(tp, random.Random(seed).choice(EXACT_VARIANTS))
    s = brute_force(inst, "find_one", limit=None)
    if s is None:
        assert find_three_partition(tp.values, 2) is None
        return
    groups = extract_partition(inst, s, tp)
    assert sorted(x for g in groups for x in g) == sorted(tp.values)
    assert all(len(g) == 3 and sum(g) == tp.T for g in groups)


def test_onesided_lengths():
    tp = ThreePartition(1, (4, 4, 5))
    first = encode_onesided(tp, "ONESIDED_UW_UO_LW")
    assert onesided_scale(tp, "ONESIDED_UW_UO_LW") == 4
    T, lw, uo, m = 52, 13, 26, 1
    assert (first.bounds.lw, first.bounds.uo) == (lw, uo)
    assert first.days == (3 * m + 1) * uo + 3 * m * 8 * lw + m * T == 468
    assert all(rl == 0 for rl in first.rl)

    second = encode_onesided(tp, "ONESIDED_UW_UO_LO")
    assert onesided_scale(tp, "ONESIDED_UW_UO_LO") == 2
    T, m = 26, 1
    uo = 3 * T // 2 + 1
    assert (second.bounds.lo, second.bounds.uo) == (T, uo)
    assert second.days == (3 * m + 1) * uo + 3 * m * (3 * T + 6) + m * T


def test_block_shapes():
    b = lw_block(5, 2, 3, 6)
    assert len(b) == 2 * 6 + 8 * 3 + 5 and b == b[::-1]
    assert b[6:9] == [2, 2, 2] and b[15:18] == [1, 1, 1]
    c = lo_block(4, 2, 4)
    assert len(c) == 2 * 7 + 3 * 4 + 6 + 4 and c == c[::-1]


def _block_instance(seq, N, **bounds):
    return Instance.build(len(seq), N, [(0, r) for r in seq], **bounds)


@pytest.mark.parametrize("T, a", [(6, 2), (8, 3)])
def test_lo_block_forces_one_worker(T, a):
    # alone, a block is coverable with loads (4, 4 + a) and no tighter Uw
    seq = lo_block(a, 2, T)
    inst = _block_instance(seq, 2, lo=T, uo=3 * T // 2 + 1, Uw=4 + a)
    found = brute_force(inst, "enumerate_all", limit=None, symmetric=True)
    assert {tuple(sorted(s.workloads())) for s in found} == {(4, 4 + a)}
    assert not brute_force(inst.with_bounds(Uw=3 + a), "decide", limit=None)


@pytest.mark.parametrize("a", [4, 5])
def test_lw_block_forces_one_worker(a):
    lw, uo = 3, 6
    inst = _block_instance(lw_block(a, 2, lw, uo), 2, lw=lw, uo=uo, Uw=4 * lw + a)
    found = brute_force(inst, "enumerate_all", limit=None, symmetric=True)
    assert {tuple(sorted(s.workloads())) for s in found} == {(4 * lw, 4 * lw + a)}
    assert not brute_force(inst.with_bounds(Uw=4 * lw + a - 1), "decide", limit=None)


@pytest.mark.parametrize("variant", ONESIDED_VARIANTS)
@pytest.mark.parametrize("tp", [YES, NO], ids=["yes", "no"])
def test_onesided_variants_sound(variant, tp):
    inst = encode_onesided(tp, variant)
    feasible = brute_force(inst, "decide", limit=None)
    assert feasible == (find_three_partition(tp.values, tp.m) is not None)


def test_variant_kind_checked():
    with pytest.raises(ValueError):
        encode_exact(PACKING, "ONESIDED_UW_UO_LW")
    with pytest.raises(ValueError):
        encode_onesided(PACKING, "UW_LW")
