import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from interlock.core import JournalGraph  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def triangle():
    """Triangle a-b-c with line values 1 (a,b), 2 (b,c), 3 (a,c)."""
    return JournalGraph.from_edges("abc", [(0, 1, 1), (1, 2, 2), (0, 2, 3)])


@pytest.fixture
def path3():
    return JournalGraph.from_edges("abc", [(0, 1, 1), (1, 2, 1)])


def complete(n: int) -> JournalGraph:
    return JournalGraph.from_edges(
        [f"v{i}" for i in range(n)], [(u, v, 1) for u in range(n) for v in range(u + 1, n)]
    )


def star(n: int) -> JournalGraph:
    return JournalGraph.from_edges([f"v{i}" for i in range(n)], [(0, v, 1) for v in range(1, n)])


def cycle(n: int) -> JournalGraph:
    return JournalGraph.from_edges([f"v{i}" for i in range(n)], [(i, (i + 1) % n, 1) for i in range(n)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
