"""Immutable simple graphs, graph combinators and strong-regularity detection.

Vertices are dense 0-based integer indices.  A :class:`Graph` keeps a read-only
boolean adjacency matrix and, lazily, one Python-int bitmask per row so that
common-neighbour queries are a single ``&`` plus a popcount.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import EmptyEdgeSet, InvalidGraph, InvalidParams, OutOfRange, SameVertex


class Graph:
    """Simple undirected graph on vertices ``0..order-1``."""

    __slots__ = ("_adj", "_rows", "_hash")

    def __init__(self, adjacency):
        adj = np.array(adjacency, dtype=bool, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise InvalidGraph(f"adjacency must be square, got shape {adj.shape}")
        if adj.shape[0] < 1:
            raise InvalidGraph("a graph needs at least one vertex")
        if adj.diagonal().any():
            raise InvalidGraph("self-loops are not allowed")
        if not np.array_equal(adj, adj.T):
            raise InvalidGraph("adjacency must be symmetric")
        adj.setflags(write=False)
        self._adj = adj
        self._rows = None
        self._hash = None

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if order < 1:
            raise InvalidGraph("a graph needs at least one vertex")
        adj = np.zeros((order, order), dtype=bool)
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise OutOfRange(f"edge ({u}, {v}) outside 0..{order - 1}")
            if u == v:
                raise InvalidGraph(f"self-loop at vertex {u}")
            adj[u, v] = adj[v, u] = True
        return cls(adj)

    @property
    def order(self) -> int:
        return self._adj.shape[0]

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only boolean adjacency matrix."""
        return self._adj

    @property
    def rows(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks (bit ``j`` of ``rows[i]`` is ``i ~ j``)."""
        if self._rows is None:
            packed = np.packbits(self._adj, axis=1, bitorder="little")
            self._rows = tuple(int.from_bytes(r.tobytes(), "little") for r in packed)
        return self._rows

    def degrees(self) -> np.ndarray:
        return self._adj.sum(axis=1)

    @property
    def num_edges(self) -> int:
        return int(self._adj.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        iu, ju = np.nonzero(np.triu(self._adj, 1))
        return list(zip(iu.tolist(), ju.tolist()))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u, v])

    def neighbors(self, v: int) -> list[int]:
        return np.flatnonzero(self._adj[v]).tolist()

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        idx = np.asarray(vertices, dtype=int)
        return Graph(self._adj[np.ix_(idx, idx)])

    def delete_vertices(self, vertices: Iterable[int]) -> "Graph":
        drop = set(vertices)
        return self.induced_subgraph([v for v in range(self.order) if v not in drop])

    def delete_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = self._adj.copy()
        for u, v in edges:
            adj[u, v] = adj[v, u] = False
        return Graph(adj)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self._adj, other._adj)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.order, np.packbits(self._adj).tobytes()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.num_edges})"


@dataclass(frozen=True)
class SrgParams:
    """Parameter vector ``(n, d, lambda, mu)`` of a strongly regular graph family."""

    n: int
    d: int
    lam: int
    mu: int

    def __post_init__(self):
        for name in ("n", "d", "lam", "mu"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise InvalidParams(f"{name} must be an integer, got {value!r}")
            object.__setattr__(self, name, int(value))
        n, d, lam, mu = self.n, self.d, self.lam, self.mu
        if n < 1:
            raise InvalidParams(f"n must be positive, got {n}")
        if not 0 <= d <= n - 1:
            raise InvalidParams(f"need 0 <= d <= n-1, got d={d}, n={n}")
        if lam < 0 or mu < 0:
            raise InvalidParams("lambda and mu must be nonnegative")
        if lam > d or mu > d:
            raise InvalidParams(f"need lambda, mu <= d, got {self.as_tuple()}")

    @classmethod
    def parse(cls, text: str) -> "SrgParams":
        try:
            parts = [int(x) for x in text.replace(" ", "").split(",")]
        except ValueError as exc:
            raise InvalidParams(f"cannot parse parameters {text!r}") from exc
        if len(parts) != 4:
            raise InvalidParams(f"expected n,d,lambda,mu, got {text!r}")
        return cls(*parts)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.d, self.lam, self.mu)

    @property
    def t_squared(self) -> int:
        return (self.mu - self.lam) ** 2 + 4 * (self.d - self.mu)

    @property
    def t(self) -> float:
        return math.sqrt(self.t_squared)

    @property
    def t_exact(self) -> Optional[int]:
        """``t`` as an integer when ``t**2`` is a perfect square, else ``None``."""
        r = math.isqrt(self.t_squared)
        return r if r * r == self.t_squared else None

    def __str__(self) -> str:
        return f"srg({self.n},{self.d},{self.lam},{self.mu})"


def complete(n: int) -> Graph:
    return Graph(~np.eye(n, dtype=bool))


def empty(n: int) -> Graph:
    return Graph(np.zeros((n, n), dtype=bool))


def complement(g: Graph) -> Graph:
    adj = ~g.adjacency
    np.fill_diagonal(adj, False)
    return Graph(adj)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex ``(a, b)`` gets index ``a * h.order + b``."""
    a = g.adjacency.astype(np.uint8)
    b = h.adjacency.astype(np.uint8)
    adj = np.kron(a, np.eye(h.order, dtype=np.uint8)) + np.kron(np.eye(g.order, dtype=np.uint8), b)
    return Graph(adj.astype(bool))


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of ``g`` in :meth:`Graph.edges` order."""
    edges = np.array(g.edges(), dtype=int)
    if len(edges) == 0:
        raise EmptyEdgeSet("line graph of an edgeless graph is undefined")
    # incidence matrix M (edges x vertices); M M^T = 2 on diagonal, 1 for incident pairs
    m = np.zeros((len(edges), g.order), dtype=np.int32)
    rows = np.arange(len(edges))
    m[rows, edges[:, 0]] = 1
    m[rows, edges[:, 1]] = 1
    adj = (m @ m.T) == 1
    return Graph(adj)


def common_neighbors(g: Graph, u: int, v: int) -> int:
    n = g.order
    if not (0 <= u < n and 0 <= v < n):
        raise OutOfRange(f"vertices ({u}, {v}) outside 0..{n - 1}")
    if u == v:
        raise SameVertex(f"common_neighbors needs distinct vertices, got {u} twice")
    rows = g.rows
    return (rows[u] & rows[v]).bit_count()


def common_neighbor_matrix(g: Graph) -> np.ndarray:
    """``A @ A`` as int64; entry ``(u, v)`` counts common neighbours of ``u`` and ``v``."""
    a = g.adjacency.astype(np.float32)
    # float32 is exact here: every partial sum is an integer <= order < 2**24
    return (a @ a).astype(np.int64)


def is_regular(g: Graph) -> bool:
    deg = g.degrees()
    return bool((deg == deg[0]).all())


def detect_srg(g: Graph) -> Optional[SrgParams]:
    """Return the SRG parameters of ``g``, or ``None`` if ``g`` is not strongly regular.

    Complete and edgeless graphs are not counted as strongly regular.  Disjoint
    unions of equal complete graphs are (they have ``mu = 0``).
    """
    n = g.order
    deg = g.degrees()
    d = int(deg[0])
    if not (deg == d).all() or d == 0 or d == n - 1:
        return None
    adj = g.adjacency
    cn = common_neighbor_matrix(g)
    on_edges = cn[adj]
    nonadj = ~adj
    np.fill_diagonal(nonadj, False)
    off_edges = cn[nonadj]
    lam, mu = int(on_edges[0]), int(off_edges[0])
    if (on_edges != lam).any() or (off_edges != mu).any():
        return None
    return SrgParams(n, d, lam, mu)


def triangle_count(g: Graph) -> int:
    cn = common_neighbor_matrix(g)
    return int(cn[g.adjacency].sum()) // 6


def is_c4_free(g: Graph) -> bool:
    """True iff no two distinct vertices share two or more neighbours."""
    if g.order < 4:
        return True
    cn = common_neighbor_matrix(g)
    np.fill_diagonal(cn, 0)
    return int(cn.max()) <= 1


def c4_size_bound(n: int) -> int:
    """``floor(n (1 + sqrt(4n - 3)) / 4)``, computed exactly."""
    if n < 1:
        raise ValueError("n must be positive")
    disc = 4 * n - 3

    def fits(k: int) -> bool:
        # 4k <= n + n*sqrt(disc)
        lhs = 4 * k - n
        return lhs <= 0 or lhs * lhs <= n * n * disc

    k = math.floor(n * (1 + math.sqrt(disc)) / 4)
    while not fits(k):
        k -= 1
    while fits(k + 1):
        k += 1
    return k

