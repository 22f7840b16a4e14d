"""Exact clique, independence and chromatic numbers for small graphs, and the
theta-derived bounds on them for strongly regular parameter sets."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import ParamRelationViolated, TooLarge
from .graph import Graph, SrgParams
from .theta import theta_srg, theta_srg_complement, theta_srg_exact

CLIQUE_ORDER_CAP = 64
CHROMATIC_ORDER_CAP = 32
ROUNDING_NUDGE = 1e-9

Number = Union[Fraction, float]


def _complement_rows(g: Graph) -> list[int]:
    full = (1 << g.order) - 1
    return [full ^ r ^ (1 << v) for v, r in enumerate(g.rows)]


def _greedy_color_order(rows: list[int], cand: int) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of the candidate set; colours are nondecreasing."""
    order, colors = [], []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~rows[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            colors.append(color)
    return order, colors


def _max_clique(rows: list[int], n: int) -> list[int]:
    best: list[int] = []

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        order, colors = _greedy_color_order(rows, cand)
        for i in range(len(order) - 1, -1, -1):
            if len(clique) + colors[i] <= len(best):
                return
            v = order[i]
            nxt = cand & rows[v]
            if nxt:
                expand(clique + [v], nxt)
            elif len(clique) + 1 > len(best):
                best = clique + [v]
            cand &= ~(1 << v)

    expand([], (1 << n) - 1)
    return sorted(best)


def maximum_clique(g: Graph) -> list[int]:
    if g.order > CLIQUE_ORDER_CAP:
        raise TooLarge(f"clique search capped at order {CLIQUE_ORDER_CAP}, got {g.order}")
    return _max_clique(list(g.rows), g.order)


def maximum_independent_set(g: Graph) -> list[int]:
    if g.order > CLIQUE_ORDER_CAP:
        raise TooLarge(f"clique search capped at order {CLIQUE_ORDER_CAP}, got {g.order}")
    return _max_clique(_complement_rows(g), g.order)


def clique_number(g: Graph) -> int:
    return len(maximum_clique(g))


def independence_number(g: Graph) -> int:
    return len(maximum_independent_set(g))


def _k_colorable(rows: list[int], n: int, k: int) -> Optional[list[int]]:
    """DSATUR-ordered backtracking; returns a colouring with at most ``k`` colours."""
    colors = [-1] * n
    forbidden = [0] * n  # bitmask of colours used by neighbours
    degree = [r.bit_count() for r in rows]

    def pick() -> int:
        best, key = -1, (-1, -1)
        for v in range(n):
            if colors[v] < 0:
                cand = (forbidden[v].bit_count(), degree[v])
                if cand > key:
                    best, key = v, cand
        return best

    def solve(colored: int, used: int) -> bool:
        if colored == n:
            return True
        v = pick()
        # a fresh colour is interchangeable with any other fresh colour
        limit = min(k, used + 1)
        for c in range(limit):
            bit = 1 << c
            if forbidden[v] & bit:
                continue
            colors[v] = c
            touched = []
            nb = rows[v]
            while nb:
                u = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                if colors[u] < 0 and not forbidden[u] & bit:
                    forbidden[u] |= bit
                    touched.append(u)
            if solve(colored + 1, max(used, c + 1)):
                return True
            for u in touched:
                forbidden[u] &= ~bit
            colors[v] = -1
        return False

    return list(colors) if solve(0, 0) else None


def chromatic_number(g: Graph) -> int:
    """Binary search on ``k`` between the clique number and a greedy colouring."""
    n = g.order
    if n > CHROMATIC_ORDER_CAP:
        raise TooLarge(f"chromatic number capped at order {CHROMATIC_ORDER_CAP}, got {n}")
    rows = list(g.rows)
    if g.num_edges == 0:
        return 1
    lo = clique_number(g)
    hi = max(_greedy_color_order(rows, (1 << n) - 1)[1])
    while lo < hi:
        mid = (lo + hi) // 2
        if _k_colorable(rows, n, mid) is not None:
            hi = mid
        else:
            lo = mid + 1
    return lo


# ---------------------------------------------------------------------------
# theta-derived bounds


@dataclass(frozen=True)
class InvariantBounds:
    alpha_ub: int
    omega_ub: int
    chi_lb: int
    chi_complement_lb: int

    def as_dict(self) -> dict:
        return asdict(self)


def _floor(x: Number) -> int:
    if isinstance(x, Fraction):
        return math.floor(x)
    return math.floor(x + ROUNDING_NUDGE)


def _ceil(x: Number) -> int:
    if isinstance(x, Fraction):
        return math.ceil(x)
    return math.ceil(x - ROUNDING_NUDGE)


def _bounds_from_theta(theta: Number, theta_bar: Number) -> InvariantBounds:
    return InvariantBounds(
        alpha_ub=_floor(theta),
        omega_ub=_floor(theta_bar),
        chi_lb=_ceil(theta_bar),
        chi_complement_lb=_ceil(theta),
    )


def srg_invariant_bounds(p: SrgParams) -> InvariantBounds:
    """Sandwich-theorem bounds on alpha, omega, chi and chi of the complement."""
    exact = theta_srg_exact(p)
    if exact is not None:
        return _bounds_from_theta(*exact)
    return _bounds_from_theta(theta_srg(p), theta_srg_complement(p))


def ell_friendship_bounds(n: int, d: int, ell: int) -> InvariantBounds:
    """Bounds for a graph in which every pair has exactly ``ell`` common neighbours."""
    if not (d > ell >= 1):
        raise ParamRelationViolated(f"need d > ell >= 1, got d={d}, ell={ell}")
    if (n - 1) * ell != d * (d - 1):
        raise ParamRelationViolated(f"(n-1)*ell = {(n - 1) * ell} != d(d-1) = {d * (d - 1)}")
    r = math.isqrt(d - ell)
    if r * r == d - ell:
        theta_bar: Number = 1 + Fraction(d, r)
        theta: Number = Fraction(n * r, d + r)
    else:
        s = math.sqrt(d - ell)
        theta_bar = 1 + d / s
        theta = n * s / (d + s)
    return _bounds_from_theta(theta, theta_bar)


def tightness(bounds: InvariantBounds, actual: dict) -> dict:
    """Compare bounds with known values.

    ``actual`` may hold any of ``alpha``, ``omega``, ``chi``, ``chi_complement``;
    missing entries map to ``None``.
    """
    pairs = {
        "alpha": bounds.alpha_ub,
        "omega": bounds.omega_ub,
        "chi": bounds.chi_lb,
        "chi_complement": bounds.chi_complement_lb,
    }
    return {
        name: (None if actual.get(name) is None else actual[name] == bound)
        for name, bound in pairs.items()
    }
