"""
Building a roster from staffing intervals
=========================================

Four workers, nine days.  Each day asks for between rl and ru people on
duty, nobody may work more than 4 days in a row or rest more than 2, and
over the horizon each worker gets at most 6 days on and 4 days off.
"""

import numpy as np

from dodosp import Instance, check_schedule, classify_instance
from dodosp.certify import flow_to_schedule, schedule_to_flow, verify_certificate
from dodosp.udodosp import solve_intervals, solve_udodosp

inst = Instance.build(
    9,
    4,
    [(1, 3), (1, 1), (1, 4), (2, 3), (4, 4), (1, 3), (2, 4), (2, 2), (1, 2)],
    uw=4,
    uo=2,
    Uw=6,
    Uo=4,
)
print("class:", classify_instance(inst).value)

# only upper bounds bind, so the first step picks a headcount per day
W = solve_intervals(inst)
headcount = np.diff(W)
print("prefix headcounts W:", list(W))
print("chosen headcounts:  ", headcount.tolist())

# the second step hands the work days out round-robin
schedule = solve_udodosp(inst)
print("\ncompact form (offset, count) per day:", schedule.intervals)
for w, row in enumerate(schedule.rows(), start=1):
    print(f"  worker {w}: " + " ".join("#" if c == "1" else "." for c in row))

report = check_schedule(inst, schedule)
print("\nfeasible:", report.feasible)

# round-robin keeps everyone within one day of each other at every prefix
on = schedule.table.astype(int).cumsum(axis=1)
print("largest prefix workload gap:", int((on.max(axis=0) - on.min(axis=0)).max()))

# the same schedule as a flow through the layered state graph
cert = schedule_to_flow(inst, schedule)
print("\ncertificate edges with flow:", len(cert.flow), "value:", cert.value)
print("certificate verifies:", verify_certificate(inst, cert))
back = flow_to_schedule(inst, cert)
print("decoded rows:", back.rows())
