from __future__ import annotations

import pytest

from cihodge.engine import Engine, tower_from_complete_intersection
from cihodge.variety import CISpec, ProjectiveSpace


@pytest.fixture
def engine() -> Engine:
    return Engine()


@pytest.fixture(scope="session")
def quadric3():
    """Custom ambient: the smooth quadric threefold, tower taken from CI(P^4, [2] + [1]*r)."""
    return tower_from_complete_intersection("Q3", CISpec(ProjectiveSpace(4), (2,)), Engine())



def pytest_terminal_summary(terminalreporter):
    lines = [
        value
        for key in ("passed", "failed")
        for rep in terminalreporter.stats.get(key, [])
        if rep.when == "call"
        for name, value in rep.user_properties
        if name == "acceptance"
    ]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda text: int(text.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
