import io

import pytest
from hypothesis import given

from dodosp.certify import schedule_to_flow
from dodosp.core import Instance, Schedule
from dodosp.files import (
    FormatError,
    certificate_from_json,
    certificate_to_json,
    dump,
    instance_from_json,
    instance_to_json,
    schedule_from_json,
    schedule_to_json,
    three_partition_from_json,
)

from .strategies import interval_instances, schedules


def test_instance_defaults_and_exact_requests():
    inst = instance_from_json({"days": 3, "workers": 2, "requests": [1, [0, 2], [1, None]]})
    assert inst.requests == ((1, 1), (0, 2), (1, 2))
    assert inst.bounds.uw == 3


def test_free_worker_count():
    inst = instance_from_json({"days": 2, "workers": None, "bounds": {"uw": 1}, "requests": [[1, None], 0]})
    assert inst.workers is None and inst.requests == ((1, None), (0, 0))


@pytest.mark.parametrize(
    "data",
    [
        {"workers": 1},
        {"days": 2, "workers": 1, "colour": "red"},
        {"days": 2, "workers": 1, "bounds": {"uw": 3}},
        {"days": 2, "workers": 1, "requests": [[0, 1, 2], 0]},
        {"days": 2, "workers": "two"},
        [1, 2],
    ],
)
def test_bad_instances(data):
    with pytest.raises(FormatError):
        instance_from_json(data)


def test_bad_json_text():
    with pytest.raises(FormatError):
        instance_from_json(io.StringIO("{days: 3"))


@given(interval_instances())
def test_instance_round_trip(inst):
    assert instance_from_json(instance_to_json(inst)) == inst


@given(schedules())
def test_schedule_round_trip(s):
    assert schedule_from_json(schedule_to_json(s, "dense")) == s
    if s.intervals is not None:
        assert schedule_from_json(schedule_to_json(s, "compact")) == s


def test_compact_refused_for_scattered_days():
    with pytest.raises(ValueError):
        schedule_to_json(Schedule.from_rows(["1", "0", "1", "0"]), "compact")


def test_compact_records():
    data = {"format": "compact", "workers": 2, "intervals": [{"day": 2, "offset": 1, "count": 1}, {"day": 1, "offset": 0, "count": 2}]}
    assert schedule_from_json(data).rows() == ["10", "11"]
    data["intervals"][0]["offset"] = 5
    with pytest.raises(FormatError):
        schedule_from_json(data)


def test_schedule_row_validation():
    with pytest.raises(FormatError):
        schedule_from_json({"rows": ["10", "1"]})
    with pytest.raises(FormatError):
        schedule_from_json({"rows": ["1x"]})
    assert schedule_from_json({"rows": [], "days": 3}).workers == 0


def test_certificate_round_trip():
    inst = Instance.exact(2, [1, 2, 1])
    cert = schedule_to_flow(inst, Schedule.from_rows(["110", "011"]))
    back = certificate_from_json(certificate_to_json(cert), inst.days)
    assert back.flow == cert.flow and back.value == 2


def test_bad_certificate_vertex():
    with pytest.raises(FormatError):
        certificate_from_json({"value": 1, "edges": [["s", [1, "MAYBE", 1, 1], 1]]}, 2)


def test_three_partition_file():
    tp = three_partition_from_json({"m": 1, "A": [4, 4, 5]})
    assert tp.T == 13
    with pytest.raises(FormatError):
        three_partition_from_json({"m": 1, "A": [3, 4, 5]})
    with pytest.raises(FormatError):
        three_partition_from_json({"A": [1]})


def test_dump_writes(tmp_path):
    path = tmp_path / "x.json"
    dump({"a": 1}, path)
    assert path.read_text().strip() == '{\n  "a": 1\n}'
