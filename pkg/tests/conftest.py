import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from opmeans.reports import SearchConfig

settings.register_profile(
    "opmeans",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("opmeans")


@pytest.fixture
def small_cfg():
    """A quick search configuration for unit tests."""
    return SearchConfig(dims=(2, 3), trials=20, seed=0)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# one PASS/FAIL line per acceptance criterion, repeated in the terminal summary
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
