import os

import pytest
from hypothesis import HealthCheck, settings

from invlift import build_root_datum, enumerate_involutions

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=200, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SMALL_TYPES = ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A1xA2"]
MEDIUM_TYPES = ["A4", "B4", "C4", "D4", "D5", "F4"]


@pytest.fixture(scope="session")
def involutions():
    cache = {}

    def get(label):
        if label not in cache:
            cache[label] = list(enumerate_involutions(build_root_datum(label)))
        return cache[label]

    return get


_CRITERIA: list[tuple[int, bool, str]] = []


@pytest.fixture(scope="session")
def record_criterion():
    """Record (and echo) one pass/fail line per acceptance criterion."""

    def rec(number: int, passed: bool, detail: str) -> bool:
        line = (number, passed, detail)
        _CRITERIA.append(line)
        print(f"criterion {number:2d}: {'PASS' if passed else 'FAIL'} - {detail}")
        return passed

    return rec


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, detail in sorted(_CRITERIA, key=lambda x: x[0]):
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if passed else 'FAIL'} - {detail}")
