import sys

import pytest
from hypothesis import HealthCheck, settings

from hopfcurrents.foundations import builtin_context

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

CONTEXTS = ("C1", "C2", "C3", "C4")


@pytest.fixture(scope="session")
def contexts():
    return {name: builtin_context(name) for name in CONTEXTS}


@pytest.fixture(scope="session")
def c2(contexts):
    return contexts["C2"]


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
