import os

import pytest
from hypothesis import HealthCheck, settings

from dodosp.core import Instance

settings.register_profile(
    "default", deadline=None, max_examples=150, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", deadline=None, max_examples=40)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# acceptance lines collected during the run, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def interval_roster():
    return Instance.build(
        9,
        4,
        [(1, 3), (1, 1), (1, 4), (2, 3), (4, 4), (1, 3), (2, 4), (2, 2), (1, 2)],
        uw=4,
        uo=2,
        Uw=6,
        Uo=4,
    )


PACKING_ROWS = ["1110111000000000000000111110", "0000000011101111011110000000"]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
