import pytest

from clustertilt import fixtures


@pytest.fixture(scope="session")
def A():
    return fixtures.algebra("A")


@pytest.fixture(scope="session")
def C():
    return fixtures.algebra("C")


@pytest.fixture(scope="session")
def B():
    return fixtures.algebra("B")


@pytest.fixture(scope="session")
def pair():
    return fixtures.pair()


@pytest.fixture(scope="session")
def inds():
    return fixtures.c_indecomposables()


@pytest.fixture
def mod():
    return lambda name, over="C": fixtures.module(name, over)


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
