import itertools

import numpy as np
import pytest

from srglab.graph import Graph


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    upper = np.triu(rng.random((n, n)) < p, 1)
    return Graph(upper | upper.T)


def brute_alpha(g: Graph) -> int:
    adj = g.adjacency
    for k in range(g.order, 0, -1):
        for sub in itertools.combinations(range(g.order), k):
            if not adj[np.ix_(sub, sub)].any():
                return k
    return 0


def brute_chi(g: Graph) -> int:
    n = g.order
    edges = g.edges()
    if not edges:
        return 1
    for k in range(1, n + 1):
        for col in itertools.product(range(k), repeat=n - 1):
            col = (0,) + col
            if all(col[u] != col[v] for u, v in edges):
                return k
    return n


@pytest.fixture
def rng():
    return np.random.default_rng(20250226)


ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def acceptance():
    def record(number: int, passed: bool, detail: str) -> None:
        ACCEPTANCE_LINES[number] = f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
