import pytest

from vcblock.generators import DEFAULT_SEED, rng_from
from vcblock.graph import Graph


@pytest.fixture
def rng():
    return rng_from(DEFAULT_SEED)


@pytest.fixture
def p3():
    return Graph.path(3)


@pytest.fixture
def k3():
    return Graph.complete(3)


@pytest.fixture
def c4():
    return Graph.cycle(4)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
