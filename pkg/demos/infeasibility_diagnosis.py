"""
Why is there no roster?
=======================

When the polynomial solvers fail they return a negative cycle in their
constraint graph.  Summing the inequalities along the cycle gives 0 <= a
negative number, and each edge names the constraint family it came from.
"""

from dodosp import Instance
from dodosp.ldodosp import build_graph as counter_graph
from dodosp.ldodosp import solve_counters
from dodosp.udodosp import build_graph as window_graph
from dodosp.udodosp import exact_violations, solve_intervals

# two people, a 1-2-1-2-1 pattern, but no one may work 3 days running
tight = Instance.exact(2, [1, 2, 1, 2, 1], uw=2)
print("window checks that fail:", exact_violations(tight))

# the same clash seen as a cycle in the headcount graph
cycle = solve_intervals(Instance.build(2, 1, [(1, 1), (1, 1)], uw=1))
print("\nupper-bound instance:")
for line in cycle.describe(window_graph(Instance.build(2, 1, [(1, 1), (1, 1)], uw=1))):
    print("  ", line)

# local lower bounds: one worker, on-off-on, but rest periods need 2 days
lower = Instance.exact(1, [1, 0, 1], lo=2)
cycle = solve_counters(lower)
print("\nlower-bound instance, cycle in the period-counter graph:")
for line in cycle.describe(counter_graph(lower)):
    print("  ", line)
