"""Friendship property, windmill recognition and an exhaustive small-order scan."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DomainTooSmall, TooLarge
from .graph import Graph, common_neighbor_matrix
from .io import to_graph6

FRIENDSHIP_SCAN_CAP = 8
CHUNK = 1 << 18


def common_neighbor_constant(g: Graph) -> Optional[int]:
    """``l`` if every pair of distinct vertices has exactly ``l`` common neighbours."""
    if g.order < 2:
        raise DomainTooSmall("common-neighbour counts need at least two vertices")
    cn = common_neighbor_matrix(g)
    off = cn[~np.eye(g.order, dtype=bool)]
    return int(off[0]) if np.all(off == off[0]) else None


def has_friendship_property(g: Graph) -> bool:
    return common_neighbor_constant(g) == 1


def is_windmill(g: Graph) -> bool:
    n = g.order
    if n < 3 or n % 2 == 0:
        return False
    deg = g.degrees()
    adj = g.adjacency
    for u in np.flatnonzero(deg == n - 1):
        rest = [v for v in range(n) if v != u]
        if all(deg[v] == 2 for v in rest):
            # each non-central vertex has exactly one peer besides u
            sub = adj[np.ix_(rest, rest)]
            if np.all(sub.sum(axis=1) == 1):
                return True
    return False


def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: k for k, pair in enumerate(itertools.combinations(range(n), 2))}


def _scan_range(n: int, lo: int, hi: int) -> list[int]:
    """Edge masks in ``[lo, hi)`` whose graphs have the friendship property.

    Bit ``k`` of a mask is the ``k``-th pair in lexicographic order.  Pairs are
    tested one at a time and failing masks dropped, so most of the work is done
    on a shrinking array.
    """
    index = _pair_index(n)
    out: list[int] = []
    for start in range(lo, hi, CHUNK):
        masks = np.arange(start, min(hi, start + CHUNK), dtype=np.int64)
        for (i, j) in index:
            if masks.size == 0:
                break
            count = np.zeros(masks.size, dtype=np.int8)
            for k in range(n):
                if k in (i, j):
                    continue
                a = index[(min(i, k), max(i, k))]
                b = index[(min(j, k), max(j, k))]
                count += ((masks >> a) & (masks >> b) & 1).astype(np.int8)
            masks = masks[count == 1]
        out.extend(int(m) for m in masks)
    return out


def _mask_to_graph(n: int, mask: int) -> Graph:
    pairs = itertools.combinations(range(n), 2)
    return Graph.from_edges(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


@dataclass
class FriendshipScan:
    graphs_scanned: int
    satisfying: list[str]
    all_windmills: bool
    per_order: dict[int, int] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "graphs_scanned": self.graphs_scanned,
            "satisfying": self.satisfying,
            "all_windmills": self.all_windmills,
            "per_order": {str(k): v for k, v in self.per_order.items()},
        }


def verify_friendship_theorem(max_n: int = 7, jobs: int = 1) -> FriendshipScan:
    """Scan every labelled graph on 2..max_n vertices for the friendship property.

    ``satisfying`` lists the survivors as sorted graph6 strings (labelled, so
    windmill(2) appears 15 times); ``all_windmills`` says whether every survivor
    is a windmill.
    """
    if max_n > FRIENDSHIP_SCAN_CAP:
        raise TooLarge(f"exhaustive scan capped at {FRIENDSHIP_SCAN_CAP} vertices, got {max_n}")
    scanned = 0
    survivors: list[Graph] = []
    per_order: dict[int, int] = {}
    for n in range(2, max_n + 1):
        total = 1 << (n * (n - 1) // 2)
        scanned += total
        if jobs > 1 and total > CHUNK:
            step = -(-total // jobs)
            bounds = [(lo, min(total, lo + step)) for lo in range(0, total, step)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = pool.map(_scan_range, [n] * len(bounds), *zip(*bounds))
                masks = [m for part in parts for m in part]
        else:
            masks = _scan_range(n, 0, total)
        per_order[n] = len(masks)
        survivors += [_mask_to_graph(n, m) for m in masks]
    return FriendshipScan(
        graphs_scanned=scanned,
        satisfying=sorted(to_graph6(g) for g in survivors),
        all_windmills=all(is_windmill(g) for g in survivors),
        per_order=per_order,
    )
