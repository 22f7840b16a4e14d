"""Named graphs and parametric strongly regular families."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

import numpy as np

from .errors import DomainTooSmall, NotPrime, TooLarge
from .graph import Graph, SrgParams, cartesian_product, complete, line_graph

DEFAULT_VERTEX_CAP = 5000


def vertex_cap() -> int:
    """Construction cap, overridable through ``SRGLAB_VERTEX_CAP``."""
    raw = os.environ.get("SRGLAB_VERTEX_CAP")
    return int(raw) if raw else DEFAULT_VERTEX_CAP


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeFieldElement:
    """Element of GF(q) for prime ``q``."""

    value: int
    modulus: int

    def __post_init__(self):
        if not is_prime(self.modulus):
            raise NotPrime(f"{self.modulus} is not prime")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise ValueError("elements of different fields")
            return other.value
        return int(other)

    def __add__(self, other):
        return PrimeFieldElement(self.value + self._coerce(other), self.modulus)

    def __sub__(self, other):
        return PrimeFieldElement(self.value - self._coerce(other), self.modulus)

    def __mul__(self, other):
        return PrimeFieldElement(self.value * self._coerce(other), self.modulus)

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.modulus)

    def inverse(self) -> "PrimeFieldElement":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse")
        return PrimeFieldElement(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        return self * PrimeFieldElement(self._coerce(other), self.modulus).inverse()

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.value == other.value and self.modulus == other.modulus
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))


def cycle(length: int) -> Graph:
    if length < 3:
        raise DomainTooSmall(f"cycle length must be >= 3, got {length}")
    return Graph.from_edges(length, [(i, (i + 1) % length) for i in range(length)])


def path(n: int) -> Graph:
    if n < 1:
        raise DomainTooSmall("path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> Graph:
    """Kneser graph K(5, 2): 2-subsets of a 5-set, adjacent when disjoint."""
    pairs = list(itertools.combinations(range(5), 2))
    edges = [
        (a, b)
        for a, b in itertools.combinations(range(len(pairs)), 2)
        if not set(pairs[a]) & set(pairs[b])
    ]
    return Graph.from_edges(len(pairs), edges)


def shrikhande() -> Graph:
    """Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}."""
    conn = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    edges = []
    for a, b in itertools.combinations(range(16), 2):
        diff = ((b // 4 - a // 4) % 4, (b % 4 - a % 4) % 4)
        if diff in conn:
            edges.append((a, b))
    return Graph.from_edges(16, edges)


def rook(m: int) -> Graph:
    """The m x m rook's graph K_m □ K_m."""
    return cartesian_product(complete(m), complete(m))


def windmill(blades: int) -> Graph:
    """Blades triangles sharing vertex 0; blade ``i`` uses vertices ``2i+1, 2i+2``."""
    if blades < 1:
        raise DomainTooSmall(f"windmill needs at least one blade, got {blades}")
    edges = []
    for i in range(blades):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * blades + 1, edges)


def triangular(ell: int) -> Graph:
    """T_ell = L(K_ell), in srg(ell(ell-1)/2, 2ell-4, ell-2, 4) for ell >= 4."""
    if ell < 4:
        raise DomainTooSmall(f"triangular graphs need ell >= 4, got {ell}")
    return line_graph(complete(ell))


def triangular_params(ell: int) -> SrgParams:
    if ell < 4:
        raise DomainTooSmall(f"triangular graphs need ell >= 4, got {ell}")
    return SrgParams(ell * (ell - 1) // 2, 2 * ell - 4, ell - 2, 4)


def projective_points(dim: int, q: int) -> np.ndarray:
    """Normalised representatives (first nonzero coordinate 1) of the points of PG(dim-1, q).

    Rows are in lexicographic order.
    """
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    blocks = []
    for lead in range(dim):
        tail = dim - lead - 1
        rest = np.array(list(itertools.product(range(q), repeat=tail)), dtype=np.int64)
        rest = rest.reshape(q**tail, tail)
        block = np.zeros((q**tail, dim), dtype=np.int64)
        block[:, lead] = 1
        block[:, lead + 1:] = rest
        blocks.append(block)
    # vectors with an earlier leading 1 sort after those with more leading zeros
    return np.vstack(blocks[::-1])


def symplectic_params(n: int, q: int) -> SrgParams:
    """Parameters of Sp(2n, q)."""
    v = (q ** (2 * n) - 1) // (q - 1)
    mu = (q ** (2 * n - 2) - 1) // (q - 1)
    return SrgParams(v, q * mu, mu - 2, mu)


def symplectic_complement_params(n: int, q: int) -> SrgParams:
    ell = q ** (2 * n - 2) * (q - 1)
    return SrgParams((q ** (2 * n) - 1) // (q - 1), q ** (2 * n - 1), ell, ell)


def symplectic_polar(n: int, q: int, cap: int | None = None) -> Graph:
    """Symplectic polar graph Sp(2n, q) for prime ``q``.

    Vertices are projective points of GF(q)^(2n), adjacent when distinct and
    orthogonal under sum_i x_{2i} y_{2i+1} - x_{2i+1} y_{2i}.
    """
    if n < 2:
        raise DomainTooSmall(f"symplectic polar graphs need n >= 2, got {n}")
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime; only prime fields are supported")
    cap = vertex_cap() if cap is None else cap
    size = (q ** (2 * n) - 1) // (q - 1)
    if size > cap:
        raise TooLarge(f"Sp({2 * n},{q}) has {size} vertices, cap is {cap}")
    pts = projective_points(2 * n, q)
    omega = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for i in range(n):
        omega[2 * i, 2 * i + 1] = 1
        omega[2 * i + 1, 2 * i] = -1
    form = (pts @ omega @ pts.T) % q
    adj = form == 0
    np.fill_diagonal(adj, False)
    return Graph(adj)
