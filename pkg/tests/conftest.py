import pytest

from ruvcodes.gf import make_field
from ruvcodes.quotient import make_ambient
from ruvcodes.ring4 import parse_ring_element


def ambient(p, m, s, alpha):
    F = make_field(p, m, s)
    return make_ambient(F, parse_ring_element(F, alpha))


@pytest.fixture(scope="session")
def f3():
    return make_field(3, 1, 1)


@pytest.fixture(scope="session")
def nou():
    return ambient(3, 1, 1, "2+v+uv")


@pytest.fixture(scope="session")
def full():
    return ambient(3, 1, 1, "2+u+v")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
