import sys

import pytest

from lineadmit import corpus
from lineadmit.arrangement import ProjLine, build


@pytest.fixture(scope="session")
def suciu():
    return corpus.get("suciu_deleted_b3")


@pytest.fixture(scope="session")
def suciu_arr(suciu):
    return suciu.arrangement()


@pytest.fixture(scope="session")
def rho(suciu):
    return suciu.local_systems["rho"]


@pytest.fixture
def triangle():
    return build([ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(0, 0, 1)])


def pencil(m, extra=()):
    """``m`` lines through (0:0:1), optionally followed by ``extra`` lines."""
    return build([ProjLine(1, k, 0) for k in range(m - 1)] + [ProjLine(0, 1, 0)] + list(extra))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
