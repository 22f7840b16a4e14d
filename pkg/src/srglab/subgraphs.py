"""Necessary conditions for one graph to sit inside another as a spanning or
induced subgraph, and an induced-cycle search used as a brute-force oracle.

None of the conditions can certify containment; a report is either
``EXCLUDED`` (some necessary condition fails) or ``INCONCLUSIVE``.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass

from .errors import DegenerateGraph, DomainTooSmall, OrderMismatch, TooLarge
from .graph import Graph, SrgParams
from .spectral import eigenvalues, srg_energy
from .theta import theta_cycle, theta_srg

RATIO_SLACK = 1e-12
VALUE_SLACK = 1e-9
CYCLE_SEARCH_CAP = 32


class Verdict(enum.Enum):
    EXCLUDED = "Excluded"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Check:
    """One inequality ``lhs <op> rhs``; ``tight`` marks equality within slack."""

    name: str
    lhs: float
    rhs: float
    satisfied: bool
    anchor: str
    tight: bool = False

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "satisfied": self.satisfied,
            "anchor": self.anchor,
            "tight": self.tight,
        }


@dataclass(frozen=True)
class ConditionReport:
    verdict: Verdict
    checks: tuple[Check, ...]

    @classmethod
    def from_checks(cls, checks) -> "ConditionReport":
        checks = tuple(checks)
        ok = all(c.satisfied for c in checks)
        return cls(Verdict.INCONCLUSIVE if ok else Verdict.EXCLUDED, checks)

    @property
    def excluded(self) -> bool:
        return self.verdict is Verdict.EXCLUDED

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {"verdict": self.verdict.value, "checks": [c.as_dict() for c in self.checks]}


def _le(name, lhs, rhs, anchor, slack) -> Check:
    lhs, rhs = float(lhs), float(rhs)
    return Check(name, lhs, rhs, lhs <= rhs + slack, anchor, abs(lhs - rhs) <= slack)


def _ge(name, lhs, rhs, anchor, slack) -> Check:
    lhs, rhs = float(lhs), float(rhs)
    return Check(name, lhs, rhs, lhs >= rhs - slack, anchor, abs(lhs - rhs) <= slack)


# ---------------------------------------------------------------------------
# spanning subgraphs


def _same_order(pG: SrgParams, pH: SrgParams) -> None:
    if pG.n != pH.n:
        raise OrderMismatch(f"spanning subgraph needs equal orders, got {pG.n} and {pH.n}")


def spanning_simple(pG: SrgParams, pH: SrgParams) -> ConditionReport:
    """``d > d'``, ``lambda >= lambda'``, ``min(lambda, mu) >= mu'``."""
    _same_order(pG, pH)
    anchor = "edge deletion cannot raise degrees or common-neighbour counts"
    d_check = Check("degree drops", pG.d, pH.d, pG.d > pH.d, anchor, pG.d == pH.d)
    return ConditionReport.from_checks(
        [
            d_check,
            _ge("lambda does not grow", pG.lam, pH.lam, anchor, 0),
            _ge("mu bounded by min(lambda, mu)", min(pG.lam, pG.mu), pH.mu, anchor, 0),
        ]
    )


def spanning_theta(pG: SrgParams, pH: SrgParams) -> ConditionReport:
    """Theta monotonicity under edge deletion, specialised to two SRG families.

    The first check is the ratio ``(d/d') (mu'-lambda'+t') / (mu-lambda+t) >= 1``
    (complement form); the second compares theta(H) with theta(G) directly.
    The two are equivalent since theta(G) theta(complement G) = n.
    """
    _same_order(pG, pH)
    if pH.d == 0:
        raise DegenerateGraph("spanning subgraph with no edges")
    theta_g, theta_h = theta_srg(pG), theta_srg(pH)  # raises on degenerate parameters
    ratio = (pG.d / pH.d) * (pH.mu - pH.lam + pH.t) / (pG.mu - pG.lam + pG.t)
    first = _ge(
        "complement theta ratio",
        ratio,
        1.0,
        "theta of the complement cannot grow when edges are removed from G",
        RATIO_SLACK,
    )
    second = _ge(
        "theta grows under edge deletion",
        theta_h,
        theta_g,
        "theta cannot shrink when edges are removed from G",
        VALUE_SLACK,
    )
    if first.satisfied != second.satisfied:
        raise ArithmeticError(f"equivalent theta forms disagree for {pG} and {pH}")
    return ConditionReport.from_checks([first, second])


def spanning_regular(
    n: int, dG: int, lambda2G: float, dH: int, lambdaminH: float
) -> ConditionReport:
    """Eigenvalue form for regular G and H on ``n`` vertices.

    Checks ``n(1+lambda2(G))/(n-dG+lambda2(G)) + dH/lambdamin(H) >= 1`` and the
    equivalent bound on theta(G) itself.
    """
    if not (0 < dG < n - 1) or not (0 < dH < n - 1):
        raise DegenerateGraph(f"both graphs must be noncomplete and nonempty (n={n}, dG={dG}, dH={dH})")
    if dH > dG:
        raise DegenerateGraph(f"spanning subgraph cannot have larger degree ({dH} > {dG})")
    if lambda2G <= -1 or lambdaminH >= 0:
        raise DegenerateGraph(f"need lambda2(G) > -1 and lambdamin(H) < 0, got {lambda2G}, {lambdaminH}")
    upper_gbar = n * (1 + lambda2G) / (n - dG + lambda2G)
    first = _ge(
        "complement eigenvalue bound",
        upper_gbar + dH / lambdaminH,
        1.0,
        "upper bound on theta of complement G vs lower bound on theta of complement H",
        VALUE_SLACK,
    )
    second = _le(
        "theta eigenvalue bound",
        (n - dG + lambda2G) / (1 + lambda2G),
        -n * lambdaminH / (dH - lambdaminH),
        "lower bound on theta(G) vs upper bound on theta(H)",
        VALUE_SLACK,
    )
    if first.satisfied != second.satisfied and not (first.tight or second.tight):
        raise ArithmeticError("equivalent eigenvalue forms disagree")
    return ConditionReport.from_checks([first, second])


def spanning_regular_graphs(g: Graph, h: Graph) -> ConditionReport:
    """:func:`spanning_regular` with spectra computed from two regular graphs."""
    if g.order != h.order:
        raise OrderMismatch(f"spanning subgraph needs equal orders, got {g.order} and {h.order}")
    dg, dh = g.degrees(), h.degrees()
    if len(set(dg.tolist())) != 1 or len(set(dh.tolist())) != 1:
        raise DegenerateGraph("both graphs must be regular")
    return spanning_regular(
        g.order,
        int(dg[0]),
        eigenvalues(g).second_largest,
        int(dh[0]),
        eigenvalues(h).smallest,
    )


# ---------------------------------------------------------------------------
# induced subgraphs


def induced_theta_energy(pG: SrgParams, thetaH: float, energyH: float) -> ConditionReport:
    """``theta(H) <= theta(G)`` and ``E(H) <= E(G)`` for an induced subgraph H."""
    return ConditionReport.from_checks(
        [
            _le("theta", thetaH, theta_srg(pG), "theta is monotone on induced subgraphs", VALUE_SLACK),
            _le("energy", energyH, srg_energy(pG), "energy is monotone on induced subgraphs", VALUE_SLACK),
        ]
    )


def _theta_ratio(pG: SrgParams, pH: SrgParams) -> float:
    sG = pG.t + pG.mu - pG.lam
    sH = pH.t + pH.mu - pH.lam
    return (pH.n / pG.n) * (sH / sG) * ((2 * pG.d + sG) / (2 * pH.d + sH))


def _energy_ratio(pG: SrgParams, pH: SrgParams) -> float:
    num = pG.t * pH.d * (pH.t + 2 * (pH.n - pH.d) + pH.lam - pH.mu)
    den = pH.t * pG.d * (pG.t + 2 * (pG.n - pG.d) + pG.lam - pG.mu)
    return num / den


def induced_srg_pair(pG: SrgParams, pH: SrgParams) -> ConditionReport:
    """Both SRG ratio inequalities (theta(H)/theta(G) and E(H)/E(G), each <= 1)."""
    anchor_t = "theta(H)/theta(G) for an induced subgraph"
    anchor_e = "E(H)/E(G) for an induced subgraph"
    return ConditionReport.from_checks(
        [
            _le("order", pH.n, pG.n, "an induced subgraph has no more vertices", 0),
            _le("theta ratio", _theta_ratio(pG, pH), 1.0, anchor_t, RATIO_SLACK),
            _le("energy ratio", _energy_ratio(pG, pH), 1.0, anchor_e, RATIO_SLACK),
        ]
    )


def triangular_host_test(pH: SrgParams, l: int) -> ConditionReport:
    """Can an srg(pH) be an induced subgraph of the triangular graph T_l?

    With host parameters ``(l(l-1)/2, 2l-4, l-2, 4)`` the ratio conditions
    reduce to ``2 theta(H) <= l`` and ``E(H) <= 2l(l-3)``.
    """
    if l < 4:
        raise DomainTooSmall(f"triangular hosts need l >= 4, got {l}")
    n, d, lam, mu = pH.as_tuple()
    t = pH.t
    s = t + mu - lam
    return ConditionReport.from_checks(
        [
            _le("host order", n, l * (l - 1) // 2, "T_l has l(l-1)/2 vertices", 0),
            _le("theta vs l", 2 * n * s / (2 * d + s), l, "theta(T_l) = l/2", RATIO_SLACK * l),
            _le(
                "energy vs 2l(l-3)",
                d * (t + 2 * (n - d) + lam - mu) / t,
                2 * l * (l - 3),
                "E(T_l) = 2l(l-3)",
                RATIO_SLACK * l * l,
            ),
        ]
    )


# ---------------------------------------------------------------------------
# induced cycles


def count_induced_cycles(g: Graph, maxlen: int) -> Counter:
    """Number of induced cycles of each length ``3..maxlen``.

    Each cycle is enumerated once: from its least vertex ``s``, in the
    direction whose first step is smaller than its last.
    """
    n = g.order
    if n > CYCLE_SEARCH_CAP:
        raise TooLarge(f"induced-cycle search capped at order {CYCLE_SEARCH_CAP}, got {n}")
    maxlen = min(maxlen, n)
    rows = list(g.rows)
    counts: Counter = Counter()

    def extend(v0bit: int, v1: int, last: int, size: int, blocked: int) -> None:
        cand = rows[last] & ~blocked
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if rows[w] & v0bit:
                # w closes the cycle; continuing past it would add the chord v0-w
                if w > v1:
                    counts[size + 1] += 1
            elif size + 1 < maxlen:
                extend(v0bit, v1, w, size + 1, blocked | rows[last] | (1 << last))

    for s in range(n):
        below = (1 << (s + 1)) - 1
        nb = rows[s] & ~below
        while nb:
            v1 = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            extend(1 << s, v1, v1, 2, below)
    return counts


def find_induced_cycles(g: Graph, maxlen: int) -> set[int]:
    if maxlen > g.order:
        raise DomainTooSmall(f"maxlen {maxlen} exceeds the order {g.order}")
    return set(count_induced_cycles(g, maxlen))


def cycle_theta_energy(length: int) -> tuple[float, float]:
    """theta and energy of C_length, the inputs most often fed to :func:`induced_theta_energy`."""
    energy = sum(abs(2 * math.cos(2 * math.pi * j / length)) for j in range(length))
    return theta_cycle(length), energy
