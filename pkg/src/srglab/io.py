"""Edge-list and graph6 reading and writing.

Edge-list text: first non-comment line is the order ``n``, then one ``u v``
pair per line (0-based, whitespace separated).  graph6 follows the standard
packing of the upper triangle, column by column, six bits per printable byte.
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

from .errors import ParseError
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


def parse_edgelist(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty edge list")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise ParseError(f"expected 'u v', got {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return Graph.from_edges(n, edges)


def to_edgelist(g: Graph) -> str:
    out = [str(g.order)]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def _upper_triangle_bits(g: Graph) -> np.ndarray:
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    j, i = np.tril_indices(g.order, -1)
    return g.adjacency[i, j]


def to_graph6(g: Graph, header: bool = False) -> str:
    bits = _upper_triangle_bits(g).astype(np.uint8)
    pad = (-len(bits)) % 6
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)]).reshape(-1, 6)
    values = bits @ np.array([32, 16, 8, 4, 2, 1], dtype=np.uint8)
    body = _encode_n(g.order) + bytes((values + 63).tolist())
    text = body.decode("ascii")
    return GRAPH6_HEADER + text if header else text


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    data = s.encode("ascii")
    if not data or any(b < 63 or b > 126 for b in data):
        raise ParseError(f"not a graph6 string: {text!r}")
    if data[0] != 126:
        n, rest = data[0] - 63, data[1:]
    elif len(data) > 1 and data[1] == 126:
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        rest = data[8:]
    else:
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        rest = data[4:]
    nbits = n * (n - 1) // 2
    if len(rest) != (nbits + 5) // 6:
        raise ParseError(f"graph6 body has {len(rest)} bytes, expected {(nbits + 5) // 6}")
    values = np.frombuffer(rest, dtype=np.uint8) - 63
    bits = np.unpackbits(values[:, None], axis=1)[:, 2:].ravel()[:nbits].astype(bool)
    adj = np.zeros((n, n), dtype=bool)
    j, i = np.tril_indices(n, -1)
    adj[i, j] = bits
    adj[j, i] = bits
    return Graph(adj)


def parse_graph(text: str) -> Graph:
    """Parse edge-list or graph6 text, choosing the format by the first byte."""
    s = text.lstrip()
    if not s:
        raise ParseError("empty graph input")
    if s[0].isdigit() or s[0] == "#":
        return parse_edgelist(s)
    return parse_graph6(s.splitlines()[0])


def read_graph(source: str) -> Graph:
    """Read a graph from a file path, or from standard input when ``source`` is ``-``."""
    if source == "-":
        return parse_graph(sys.stdin.read())
    return parse_graph(Path(source).read_text())


def format_graph(g: Graph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        return to_edgelist(g)
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    raise ValueError(f"unknown graph format {fmt!r}")
