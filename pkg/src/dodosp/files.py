"""JSON formats for instances, schedules, certificates and 3-partition inputs."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .certify import SOURCE, CertVertex, FlowCertificate, sink
from .core import Instance, InvalidInstance, Schedule, apply_defaults
from .reduction import ThreePartition


class FormatError(ValueError):
    """Input file does not follow the expected JSON layout."""


def _load(src) -> Any:
    if isinstance(src, (dict, list)):
        return src
    text = Path(src).read_text() if not hasattr(src, "read") else src.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc


def _int(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(f"{what} must be an integer, got {value!r}")
    return value


def instance_from_json(data) -> Instance:
    """``{"days", "workers", "bounds": {...}, "requests": [[rl, ru] | r, ...]}``.

    ``workers`` may be null (worker-count optimisation); ``requests`` may be
    omitted (no requests) and single integers mean exact requests.
    """
    data = _load(data)
    if not isinstance(data, dict):
        raise FormatError("instance must be a JSON object")
    unknown = set(data) - {"days", "workers", "bounds", "requests"}
    if unknown:
        raise FormatError(f"unknown instance field(s): {sorted(unknown)}")
    if "days" not in data:
        raise FormatError("instance needs 'days'")
    days = _int(data["days"], "days")
    workers = data.get("workers")
    if workers is not None:
        workers = _int(workers, "workers")
    bounds = data.get("bounds") or {}
    if not isinstance(bounds, dict):
        raise FormatError("'bounds' must be an object")
    raw = data.get("requests")
    requests = None
    if raw is not None:
        if not isinstance(raw, list):
            raise FormatError("'requests' must be a list")
        requests = []
        for d, item in enumerate(raw, start=1):
            if isinstance(item, list):
                if len(item) != 2:
                    raise FormatError(f"request for day {d} must be [rl, ru]")
                rl = _int(item[0], f"rl of day {d}")
                ru = None if item[1] is None else _int(item[1], f"ru of day {d}")
                if ru is None and workers is not None:
                    ru = workers
                requests.append((rl, ru))
            else:
                r = _int(item, f"request of day {d}")
                requests.append((r, r))
    try:
        if workers is None:
            reqs = tuple(requests) if requests is not None else ((0, None),) * days
            return Instance(days, None, apply_defaults(bounds, days), reqs)
        return Instance.build(days, workers, requests, **bounds)
    except InvalidInstance as exc:
        raise FormatError(str(exc)) from exc


def instance_to_json(instance: Instance) -> dict:
    exact = instance.is_exact
    return {
        "days": instance.days,
        "workers": instance.workers,
        "bounds": instance.bounds.as_dict(),
        "requests": [rl if exact else [rl, ru] for rl, ru in instance.requests],
    }


def schedule_to_json(schedule: Schedule, fmt: str = "dense") -> dict:
    if fmt == "dense":
        return {"format": "dense", "days": schedule.days, "workers": schedule.workers, "rows": schedule.rows()}
    if fmt == "compact":
        intervals = schedule.intervals
        if intervals is None:
            raise ValueError("schedule has no compact cyclic-interval form; use the dense format")
        return {
            "format": "compact",
            "days": schedule.days,
            "workers": schedule.workers,
            "intervals": [
                {"day": d, "offset": off, "count": k} for d, (off, k) in enumerate(intervals, start=1)
            ],
        }
    raise ValueError(f"unknown schedule format {fmt!r}")


def schedule_from_json(data) -> Schedule:
    data = _load(data)
    if isinstance(data, list):
        data = {"rows": data}
    if not isinstance(data, dict):
        raise FormatError("schedule must be a JSON object or a list of rows")
    if "rows" in data:
        rows = data["rows"]
        if not isinstance(rows, list) or any(not isinstance(r, str) or set(r) - {"0", "1"} for r in rows):
            raise FormatError("'rows' must be a list of 0/1 strings")
        if len({len(r) for r in rows}) > 1:
            raise FormatError("rows differ in length")
        if not rows:
            days = data.get("days")
            if days is None:
                raise FormatError("an empty schedule needs 'days'")
            return Schedule.all_off(_int(days, "days"), 0)
        return Schedule.from_rows([[c == "1" for c in r] for r in rows])
    if "intervals" in data:
        workers = _int(data.get("workers"), "workers")
        recs = data["intervals"]
        try:
            recs = sorted(recs, key=lambda r: r["day"])
            if [r["day"] for r in recs] != list(range(1, len(recs) + 1)):
                raise FormatError("compact records must cover days 1..D once each")
            pairs = [(_int(r["offset"], "offset"), _int(r["count"], "count")) for r in recs]
        except (KeyError, TypeError) as exc:
            raise FormatError(f"bad compact record: {exc}") from exc
        if workers == 0:
            return Schedule.all_off(len(pairs), 0)
        for off, k in pairs:
            if not (0 <= off < workers and 0 <= k <= workers):
                raise FormatError(f"offset/count ({off}, {k}) outside [0, {workers})")
        return Schedule.from_intervals(workers, pairs)
    raise FormatError("schedule needs 'rows' or 'intervals'")


def _vertex_to_json(v: CertVertex):
    if v.shift in ("s", "t"):
        return v.shift
    return [v.day, v.shift, v.run, v.worked]


def _vertex_from_json(x, days: int) -> CertVertex:
    if x == "s":
        return SOURCE
    if x == "t":
        return sink(days)
    if not (isinstance(x, list) and len(x) == 4 and x[1] in ("ON", "OFF")):
        raise FormatError(f"bad certificate vertex {x!r}")
    return CertVertex(_int(x[0], "day"), x[1], _int(x[2], "run"), _int(x[3], "worked"))


def certificate_to_json(cert: FlowCertificate) -> dict:
    edges = sorted(cert.flow.items())
    return {
        "value": cert.value,
        "edges": [[_vertex_to_json(u), _vertex_to_json(v), f] for (u, v), f in edges],
    }


def certificate_from_json(data, days: int) -> FlowCertificate:
    data = _load(data)
    try:
        value = _int(data["value"], "value")
        flow = {}
        for tail, head, f in data["edges"]:
            key = (_vertex_from_json(tail, days), _vertex_from_json(head, days))
            flow[key] = flow.get(key, 0) + _int(f, "flow")
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"bad certificate: {exc}") from exc
    return FlowCertificate(flow, value)


def three_partition_from_json(data) -> ThreePartition:
    data = _load(data)
    try:
        return ThreePartition(_int(data["m"], "m"), tuple(_int(a, "value") for a in data["A"]))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"3-partition file needs 'm' and 'A': {exc}") from exc
    except InvalidInstance as exc:
        raise FormatError(str(exc)) from exc


def dump(obj, path=None) -> str:
    text = json.dumps(obj, indent=2)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text

