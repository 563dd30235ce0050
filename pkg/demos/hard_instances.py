"""
Packing numbers into workers
============================

With local lower bounds and a global cap on days worked the problem is as
hard as 3-Partition.  Each number becomes a run of single-person days,
separated by empty days; the lower bound stops a run from being shared and
the cap makes every worker's runs add up to exactly T.
"""

from dodosp import check_schedule
from dodosp.oracle import brute_force, find_three_partition
from dodosp.reduction import (
    ONESIDED_VARIANTS,
    ThreePartition,
    encode_exact,
    encode_onesided,
    extract_partition,
    restricted_instances,
)

tp = ThreePartition(2, (3, 3, 3, 4, 4, 5))
inst = encode_exact(tp, "UW_LW")
print(f"D={inst.days}, N={inst.workers}, Uw={inst.bounds.Uw}, lw={inst.bounds.lw}")
print("requests:", "".join(str(r) for r in inst.rl))

schedule = brute_force(inst, "find_one", limit=None)
for w, row in enumerate(schedule.rows(), start=1):
    print(f"  worker {w}: {row}")
print("feasible:", check_schedule(inst, schedule).feasible)
print("partition read back:", extract_partition(inst, schedule, tp))

# every small restricted instance, four encodings each
print("\nm=2, sum <= 30:")
for tp in restricted_instances(2, 30):
    truth = find_three_partition(tp.values, 2) is not None
    answers = {brute_force(encode_exact(tp, v), "decide", limit=None) for v in ("UW_LW", "UW_LO", "UO_LO", "UO_LW")}
    print(f"  {tp.values}: partition={truth}, encodings say {answers}")

# one-sided requests (rl = 0 everywhere) are still hard, with longer gadgets
tp = ThreePartition(1, (4, 4, 5))
for variant in ONESIDED_VARIANTS:
    big = encode_onesided(tp, variant)
    b = big.bounds
    print(f"\n{variant.value}: D={big.days}, lw={b.lw}, lo={b.lo}, uo={b.uo}, Uw={b.Uw}")
    print("  feasible:", brute_force(big, "decide", limit=None))
