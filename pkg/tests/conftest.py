import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "repo", deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repo"))

from dgin.census import enumerate_borel  # noqa: E402


@pytest.fixture(scope="session")
def census_3t2():
    return enumerate_borel("3t+2", 3)


@pytest.fixture(scope="session")
def census_7t5():
    return enumerate_borel("7t-5", 3)


ACCEPTANCE_LINES = []


@pytest.fixture
def verdict():
    """Record one acceptance line and fail the test when it does not pass."""
    def record(label, ok, detail):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}: {detail}")
        assert ok, f"{label}: {detail}"
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
