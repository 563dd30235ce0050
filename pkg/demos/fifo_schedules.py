"""
First in, first out
===================

Without global caps a roster can always be rearranged so that whoever
starts a work (or off) period earlier also finishes it no later.  Such
rosters are determined by two running counts: work periods started by day
d, and work periods finished before day d.
"""

import itertools

from dodosp import Instance, check_fifo
from dodosp.ldodosp import counters_from_schedule, counters_to_schedule, solve_counters
from dodosp.oracle import brute_force

inst = Instance.build(8, 3, [(1, 2), (2, 2), (2, 3), (1, 2), (1, 1), (2, 2), (2, 3), (1, 2)], lw=2, uw=3, lo=2, uo=3)
c = solve_counters(inst)
print("started by day d: ", c.starts)
print("finished before d:", c.ends)
s = counters_to_schedule(inst, c)
for w, row in enumerate(s.rows(), start=1):
    print(f"  worker {w}: {row}")
print("FIFO:", check_fifo(s), " counters recovered:", counters_from_schedule(s) == c)

# with a cap on days worked that rearrangement can break feasibility;
# search small two-worker instances for one whose every roster is non-FIFO
for D in range(5, 9):
    for demand in itertools.product(range(3), repeat=D):
        cand = Instance.exact(2, demand, lw=2, Uw=5)
        every = brute_force(cand, "enumerate_all", limit=None)
        if every and not any(check_fifo(x) for x in every):
            print(f"\nD={D}, demand {demand}: {len(every)} rosters, none FIFO")
            for x in every:
                print("  ", x.rows())
            break
    else:
        continue
    break
