import pytest

from fuzzycat.fixtures import partition_fixture
from fuzzycat.lattice import make_lukasiewicz_chain


@pytest.fixture(scope="session")
def L2():
    return make_lukasiewicz_chain(1)


@pytest.fixture(scope="session")
def L3():
    return make_lukasiewicz_chain(2)


@pytest.fixture(scope="session")
def L5():
    return make_lukasiewicz_chain(4)


@pytest.fixture(scope="session")
def chains(L2, L3, L5):
    return [L2, L3, L5]


@pytest.fixture(scope="session")
def fixture_partition(L5):
    """A_j1 = [1, 1, 1/4], A_j2 = [1/4, 0, 1] on x1..x3."""
    return partition_fixture(L5)


def pytest_terminal_summary(terminalreporter, config):
    lines = getattr(config, "acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
