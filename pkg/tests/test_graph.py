import itertools

import numpy as np
import pytest

from srglab.errors import EmptyEdgeSet, InvalidGraph, InvalidParams, OutOfRange, SameVertex
from srglab.graph import (
    Graph,
    SrgParams,
    c4_size_bound,
    cartesian_product,
    common_neighbors,
    complement,
    complete,
    detect_srg,
    empty,
    is_c4_free,
    is_regular,
    line_graph,
    triangle_count,
)
from srglab.constructions import cycle, petersen, shrikhande, windmill

from conftest import random_graph


def brute_triangles(g):
    adj = g.adjacency
    return sum(
        1 for a, b, c in itertools.combinations(range(g.order), 3) if adj[a, b] and adj[b, c] and adj[a, c]
    )


def test_rejects_loops_and_asymmetry():
    with pytest.raises(InvalidGraph):
        Graph(np.eye(3, dtype=bool))
    a = np.zeros((3, 3), dtype=bool)
    a[0, 1] = True
    with pytest.raises(InvalidGraph):
        Graph(a)
    with pytest.raises(InvalidGraph):
        Graph.from_edges(3, [(0, 0)])


def test_adjacency_is_read_only():
    g = cycle(5)
    with pytest.raises(ValueError):
        g.adjacency[0, 1] = False


def test_basic_counts():
    g = petersen()
    assert g.order == 10 and g.num_edges == 15
    assert list(g.degrees()) == [3] * 10
    assert is_regular(g)
    assert complement(complement(g)) == g


def test_common_neighbors_errors():
    g = cycle(5)
    assert common_neighbors(g, 0, 2) == 1
    with pytest.raises(OutOfRange):
        common_neighbors(g, 0, 7)
    with pytest.raises(SameVertex):
        common_neighbors(g, 1, 1)


def test_line_graph_of_empty_raises():
    with pytest.raises(EmptyEdgeSet):
        line_graph(empty(4))


def test_line_graph_k4_is_octahedron():
    assert detect_srg(line_graph(complete(4))) == SrgParams(6, 4, 2, 4)


def test_cartesian_product_counts():
    g = cartesian_product(complete(3), cycle(4))
    assert g.order == 12
    assert g.num_edges == 3 * 4 + 3 * 4


def test_detect_srg():
    assert detect_srg(petersen()) == SrgParams(10, 3, 0, 1)
    assert detect_srg(shrikhande()) == SrgParams(16, 6, 2, 2)
    assert detect_srg(complete(5)) is None
    assert detect_srg(cycle(6)) is None


def test_srg_params_validation():
    with pytest.raises(InvalidParams):
        SrgParams(5, 5, 0, 0)
    with pytest.raises(InvalidParams):
        SrgParams(5, 2, 3, 0)
    with pytest.raises(InvalidParams):
        SrgParams.parse("1,2,3")
    p = SrgParams.parse("16, 6, 2, 2")
    assert p.t_exact == 4 and str(p) == "srg(16,6,2,2)"
    assert SrgParams(45, 22, 10, 11).t_exact is None


def test_triangle_count_against_brute_force(rng):
    for _ in range(30):
        g = random_graph(rng, int(rng.integers(3, 12)), rng.random())
        assert triangle_count(g) == brute_triangles(g)
    assert triangle_count(shrikhande()) == 32


def test_windmill_is_c4_free_within_bound():
    for b in range(1, 8):
        g = windmill(b)
        assert is_c4_free(g)
        assert g.num_edges <= c4_size_bound(g.order)
    assert not is_c4_free(cycle(4))


def test_c4_bound_values():
    # floor(n (1 + sqrt(4n - 3)) / 4)
    assert c4_size_bound(7) == 10
    assert c4_size_bound(3) == 3
    assert c4_size_bound(13) == 26


def test_induced_and_deleted():
    g = petersen()
    h = g.induced_subgraph([0, 1, 2, 3])
    assert h.order == 4
    assert g.delete_vertices([9]).order == 9
    e = g.edges()[0]
    assert g.delete_edges([e]).num_edges == 14
