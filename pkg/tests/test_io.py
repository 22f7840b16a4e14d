import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from srglab.constructions import petersen, shrikhande
from srglab.errors import ParseError
from srglab.graph import Graph
from srglab.io import format_graph, parse_edgelist, parse_graph, parse_graph6, to_edgelist, to_graph6


@st.composite
def graphs(draw, max_n=70):
    n = draw(st.integers(1, max_n))
    bits = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    adj = np.zeros((n, n), dtype=bool)
    if n > 1:
        i, j = np.triu_indices(n, 1)
        adj[i, j] = bits
        adj |= adj.T
    return Graph(adj)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_graph6_roundtrip(g):
    assert parse_graph6(to_graph6(g)) == g


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=20))
def test_edgelist_roundtrip(g):
    assert parse_edgelist(to_edgelist(g)) == g


def test_known_graph6_strings():
    # K3, P3 and the 5-cycle in the usual upper-triangle column order
    assert to_graph6(Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])) == "Bw"
    assert to_graph6(Graph.from_edges(3, [(0, 1), (1, 2)])) == "Bg"
    assert to_graph6(Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])) == "Dhc"


def test_large_order_header():
    g = Graph(np.zeros((100, 100), dtype=bool))
    s = to_graph6(g)
    assert s.startswith("~")
    assert parse_graph6(s).order == 100


def test_header_and_autodetect():
    g = shrikhande()
    assert parse_graph(">>graph6<<" + to_graph6(g) + "\n") == g
    assert parse_graph(format_graph(g, "edgelist")) == g
    assert parse_graph("# comment\n" + to_edgelist(petersen())) == petersen()


def test_bad_input():
    with pytest.raises(ParseError):
        parse_graph("")
    with pytest.raises(ParseError):
        parse_graph6("A" + "\x7f")
