"""Hypothesis strategies for small instances and schedules."""

from hypothesis import strategies as st

from dodosp.core import Instance, Schedule


@st.composite
def bounds(draw, days, lower=True, upper=True, totals=True):
    out = {}
    if upper:
        out["uw"] = draw(st.integers(1, days))
        out["uo"] = draw(st.integers(1, days))
    if lower:
        out["lw"] = draw(st.integers(1, out.get("uw", days)))
        out["lo"] = draw(st.integers(1, out.get("uo", days)))
    if totals:
        out["Uw"] = draw(st.integers(1, days))
        out["Uo"] = draw(st.integers(1, days))
    return out


@st.composite
def exact_instances(draw, max_days=6, max_workers=3, **kinds):
    D = draw(st.integers(1, max_days))
    N = draw(st.integers(0, max_workers))
    demand = draw(st.lists(st.integers(0, N), min_size=D, max_size=D))
    return Instance.exact(N, demand, **draw(bounds(D, **kinds)))


@st.composite
def interval_instances(draw, max_days=6, max_workers=3, **kinds):
    D = draw(st.integers(1, max_days))
    N = draw(st.integers(0, max_workers))
    reqs = []
    for _ in range(D):
        lo = draw(st.integers(0, N))
        reqs.append((lo, draw(st.integers(lo, N))))
    return Instance.build(D, N, reqs, **draw(bounds(D, **kinds)))


@st.composite
def schedules(draw, max_days=8, max_workers=4):
    D = draw(st.integers(1, max_days))
    N = draw(st.integers(1, max_workers))
    rows = draw(st.lists(st.lists(st.booleans(), min_size=D, max_size=D), min_size=N, max_size=N))
    return Schedule.from_rows(rows)
