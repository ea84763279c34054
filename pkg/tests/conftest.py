import math
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from wigentropy import default_grid, fock  # noqa: E402
from wigentropy.states import standard_battery  # noqa: E402

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def grid():
    return default_grid(1.0, 512)


@pytest.fixture(scope="session")
def small_grid():
    return default_grid(1.0, 128)


@pytest.fixture(scope="session")
def kets(grid):
    return [fock(n, grid.x_axis) for n in range(6)]


@pytest.fixture(scope="session")
def battery(grid):
    return standard_battery(grid.x_axis, 1.0, seed=0)


@pytest.fixture(scope="session")
def example2():
    from wigentropy.probe import example2_pair
    return example2_pair()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
