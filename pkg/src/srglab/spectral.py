"""Adjacency spectra, graph energy, interlacing and the maximal-energy bound."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InfeasibleParams, InvalidParams, TooLarge
from .graph import Graph, SrgParams

DEFAULT_SPECTRUM_CAP = 2000
MERGE_GAP = 1e-6
INTEGRALITY_TOL = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues with multiplicities, sorted by decreasing eigenvalue."""

    pairs: tuple[tuple[float, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted(((float(v), int(m)) for v, m in self.pairs), key=lambda p: -p[0]))
        if any(m <= 0 for _, m in pairs):
            raise ValueError("multiplicities must be positive")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def from_values(cls, values, gap: float = MERGE_GAP) -> "Spectrum":
        """Group sorted eigenvalues whose consecutive gaps are below ``gap``."""
        vals = np.sort(np.asarray(values, dtype=float))[::-1]
        groups: list[list[float]] = []
        for v in vals:
            if groups and groups[-1][-1] - v < gap:
                groups[-1].append(v)
            else:
                groups.append([v])
        return cls(tuple((float(np.mean(g)), len(g)) for g in groups))

    @property
    def order(self) -> int:
        return sum(m for _, m in self.pairs)

    def values(self) -> np.ndarray:
        """All eigenvalues, repeated by multiplicity, in decreasing order."""
        return np.array([v for v, m in self.pairs for _ in range(m)])

    @property
    def largest(self) -> float:
        return self.pairs[0][0]

    @property
    def smallest(self) -> float:
        return self.pairs[-1][0]

    @property
    def second_largest(self) -> float:
        """Second entry of the eigenvalue list counted with multiplicity."""
        vals = self.values()
        return float(vals[1]) if len(vals) > 1 else float(vals[0])

    @property
    def energy(self) -> float:
        return float(sum(abs(v) * m for v, m in self.pairs))

    def trace(self) -> float:
        return float(sum(v * m for v, m in self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)


def jacobi_eigenvalues(matrix, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius norm falls below ``tol``
    (relative to the full norm) or after ``max_sweeps`` sweeps.  Returned in
    decreasing order.
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    scale = max(np.linalg.norm(a), 1.0)
    for _ in range(max_sweeps):
        off = math.sqrt(max(np.sum(a * a) - np.sum(np.diag(a) ** 2), 0.0))
        if off < tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
    return np.sort(np.diag(a))[::-1]


def eigenvalues(g: Graph, cap: int = DEFAULT_SPECTRUM_CAP, method: str = "eigh") -> Spectrum:
    """Adjacency spectrum of ``g``.

    ``method="eigh"`` uses LAPACK's symmetric solver; ``method="jacobi"`` the
    cyclic Jacobi routine above (slow, meant for small graphs).
    """
    if g.order > cap:
        raise TooLarge(f"order {g.order} exceeds spectrum cap {cap}")
    a = g.adjacency.astype(float)
    if method == "eigh":
        vals = np.linalg.eigvalsh(a)
    elif method == "jacobi":
        vals = jacobi_eigenvalues(a)
    else:
        raise ValueError(f"unknown eigensolver {method!r}")
    return Spectrum.from_values(vals)


def _near_int(x: float) -> Optional[int]:
    r = round(x)
    return int(r) if abs(x - r) <= INTEGRALITY_TOL else None


def srg_spectrum(p: SrgParams) -> Spectrum:
    """Closed-form spectrum of any graph in srg(p)."""
    n, d, lam, mu = p.as_tuple()
    if mu == 0:
        r = d + 1
        if lam != d - 1 or d == 0 or n % r:
            raise InfeasibleParams(f"{p} with mu = 0 is not a union of equal complete graphs")
        m = n // r
        return Spectrum(((float(r - 1), m), (-1.0, m * (r - 1))))
    t = p.t
    if t == 0:
        raise InfeasibleParams(f"t = 0 for {p}")
    ratio = (2 * d + (n - 1) * (lam - mu)) / t
    m1 = _near_int((n - 1 - ratio) / 2)
    m2 = _near_int((n - 1 + ratio) / 2)
    if m1 is None or m2 is None or m1 < 0 or m2 < 0:
        raise InfeasibleParams(f"{p} gives non-integral or negative multiplicities")
    p1 = (lam - mu + t) / 2
    p2 = (lam - mu - t) / 2
    pairs = [(float(d), 1)] + [(v, m) for v, m in ((p1, m1), (p2, m2)) if m > 0]
    return Spectrum(tuple(pairs))


def energy(g: Graph, cap: int = DEFAULT_SPECTRUM_CAP) -> float:
    if g.order > cap:
        raise TooLarge(f"order {g.order} exceeds spectrum cap {cap}")
    return float(np.abs(np.linalg.eigvalsh(g.adjacency.astype(float))).sum())


def srg_energy(p: SrgParams) -> float:
    """``d (1 + (2(n-d) + lambda - mu) / t)``."""
    t = p.t
    if t <= 0:
        raise InfeasibleParams(f"t = 0 for {p}")
    return p.d * (1 + (2 * (p.n - p.d) + p.lam - p.mu) / t)


def max_energy_bound(n: int) -> float:
    if n < 1:
        raise ValueError("n must be positive")
    return n * (math.sqrt(n) + 1) / 2


def max_energy_params(n: int) -> Optional[SrgParams]:
    """The srg family attaining :func:`max_energy_bound`, when its entries are integers.

    Returns ``None`` if ``n`` is not a perfect square, an entry is fractional, or
    the family would be the complete graph.
    """
    s = math.isqrt(n)
    if s * s != n or (n + s) % 2 or (n + 2 * s) % 4:
        return None
    d = (n + s) // 2
    lam = (n + 2 * s) // 4
    if d >= n - 1:
        return None
    try:
        return SrgParams(n, d, lam, lam)
    except InvalidParams:
        return None


def check_interlacing(parent: Spectrum, child: Spectrum, slack: float = 1e-9) -> bool:
    """Cauchy interlacing: ``lam_i >= mu_i >= lam_{n-m+i}`` for every ``i``.

    Returns ``False`` when the child is larger than the parent.
    """
    lam = parent.values()
    mu = child.values()
    n, m = len(lam), len(mu)
    if m > n:
        return False
    upper_ok = np.all(lam[:m] >= mu - slack)
    lower_ok = np.all(mu >= lam[n - m:] - slack)
    return bool(upper_ok and lower_ok)
