import pytest

from hgacyclic import Hypergraph

from helpers import NORM_EXAMPLE


@pytest.fixture
def norm_example():
    return Hypergraph([list(v) for v in NORM_EXAMPLE.values()])


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE_LINES

    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
