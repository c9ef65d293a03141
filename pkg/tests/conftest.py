from __future__ import annotations

import pytest

from symbreak.graph import Graph
from symbreak.graph6 import parse_graph6

# outcome lines of the acceptance module, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def k4_minus_e() -> Graph:
    """K4 minus edge {2,3}. Under the v1..v4 naming of `k4e_names`, v2, v3
    are our 0, 1 (the degree-3 pair) and v1, v4 are our 2, 3."""
    return parse_graph6("C}")


@pytest.fixture
def k4e_names() -> dict[str, int]:
    return {"v1": 2, "v2": 0, "v3": 1, "v4": 3}


def double_star(a: int, b: int) -> Graph:
    """Adjacent centers 0 and 1 with a and b pendant leaves."""
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return Graph(2 + a + b, edges)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
