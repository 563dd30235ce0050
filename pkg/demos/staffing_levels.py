"""
How many people, and how tight can the rules be?
================================================

Feasibility only gets easier as upper bounds grow or lower bounds shrink,
so the tightest workable bound is found by bisection.  The worker count is
different: too few people cannot cover the demand, too many leave someone
resting longer than allowed.  A negative cycle tells the search which way
to move by the sign of its coefficient on N.
"""

from dodosp import Instance
from dodosp.core import apply_defaults
from dodosp.optimize import classify_N, minimize_workers, optimize_bound, potential_graph

inst = Instance.exact(2, [1, 2, 1, 2, 1])
for which in ("uw", "uo", "Uw", "Uo"):
    print(f"smallest workable {which}: {optimize_bound(inst, which)}")

weekly = Instance.exact(1, [1, 1, 0, 0, 1, 1])
print("longest required minimum work stretch:", optimize_bound(weekly, "lw"))


def free(days, requests, **bounds):
    return Instance(days, None, apply_defaults(bounds, days), tuple(requests))


# at most one person a day, and nobody may rest two days running
g = potential_graph(free(4, [(0, 1)] * 4, uo=1))
for n in range(5):
    print(f"N={n}: {classify_N(g, n).value}")

# two people a day, nobody works two days in a row
res = minimize_workers(free(3, [(2, 2)] * 3, uw=1, Uw=3))
print("\nprobes:", [(n, c.value) for n, c in res.probes])
print("minimal N:", res.workers)

# a demand that no worker count can meet
res = minimize_workers(free(3, [(1, 1), (0, 0), (1, 1)], lw=2))
print("\nno feasible N:", res.classification.value)
for line in res.witness.describe(potential_graph(free(3, [(1, 1), (0, 0), (1, 1)], lw=2))):
    print("  ", line)
