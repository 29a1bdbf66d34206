from __future__ import annotations

import sys
from itertools import combinations

import pytest
from hypothesis import strategies as st

from localwl import generators as gen
from localwl.graph import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def graph_and_perm(draw, min_n: int = 1, max_n: int = 8):
    g = draw(graphs(min_n, max_n))
    perm = draw(st.permutations(range(g.n)))
    return g, list(perm)


@pytest.fixture
def c6():
    return gen.cycle_graph(6)


@pytest.fixture
def two_c3():
    return gen.copies(gen.cycle_graph(3), 2)


@pytest.fixture
def k4():
    return gen.complete_graph(4)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
