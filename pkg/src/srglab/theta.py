"""Lovász theta: closed forms for strongly regular graphs, eigenvalue bounds for
regular graphs, cycles, and a dense interior-point solver for small graphs."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np
from scipy.linalg import cho_factor, cho_solve, lu_factor, lu_solve, solve_triangular

from .errors import DegenerateGraph, DomainTooSmall, InfeasibleParams, NotConverged, TooLarge
from .graph import Graph, SrgParams

SDP_ORDER_CAP = 64
EXACT_TOL = 1e-9


class ThetaMethod(enum.Enum):
    SRG_CLOSED_FORM = "SrgClosedForm"
    REGULAR_EIG_BOUNDS = "RegularEigBounds"
    CYCLE_FORMULA = "CycleFormula"
    SDP = "Sdp"


@dataclass(frozen=True)
class ThetaBounds:
    lower: float
    upper: float
    method: ThetaMethod
    exact: Optional[float] = None

    def __post_init__(self):
        if self.lower > self.upper + EXACT_TOL:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        if self.exact is None and abs(self.upper - self.lower) <= EXACT_TOL:
            object.__setattr__(self, "exact", (self.lower + self.upper) / 2)
        if self.exact is not None and not (
            self.lower - EXACT_TOL <= self.exact <= self.upper + EXACT_TOL
        ):
            raise ValueError("exact value lies outside [lower, upper]")


# ---------------------------------------------------------------------------
# closed forms


def _check_theta_params(p: SrgParams) -> None:
    t = p.t
    if t <= 0 or 2 * p.d + t + p.mu - p.lam <= 0:
        raise InfeasibleParams(f"theta closed form undefined for {p}")


def theta_srg_exact(p: SrgParams) -> Optional[tuple[Fraction, Fraction]]:
    """``(theta(G), theta(complement G))`` as fractions when ``t`` is an integer."""
    _check_theta_params(p)
    t = p.t_exact
    if t is None:
        return None
    s = t + p.mu - p.lam
    return Fraction(p.n * s, 2 * p.d + s), 1 + Fraction(2 * p.d, s)


def theta_srg(p: SrgParams) -> float:
    """``n (t + mu - lambda) / (2d + t + mu - lambda)``."""
    exact = theta_srg_exact(p)
    if exact is not None:
        return float(exact[0])
    s = p.t + p.mu - p.lam
    return p.n * s / (2 * p.d + s)


def theta_srg_complement(p: SrgParams) -> float:
    """``1 + 2d / (t + mu - lambda)``."""
    exact = theta_srg_exact(p)
    if exact is not None:
        return float(exact[1])
    return 1 + 2 * p.d / (p.t + p.mu - p.lam)


def theta_srg_bounds(p: SrgParams) -> tuple[ThetaBounds, ThetaBounds]:
    a, b = theta_srg(p), theta_srg_complement(p)
    return (
        ThetaBounds(a, a, ThetaMethod.SRG_CLOSED_FORM, a),
        ThetaBounds(b, b, ThetaMethod.SRG_CLOSED_FORM, b),
    )


def product_identity_check(p: SrgParams) -> float:
    """``theta(G) * theta(complement G) - n``; zero for every SRG."""
    exact = theta_srg_exact(p)
    if exact is not None:
        return float(exact[0] * exact[1] - p.n)
    return theta_srg(p) * theta_srg_complement(p) - p.n


def theta_friendship_family(k: int) -> float:
    """theta of the complement of a hypothetical srg(n, k, 1, 1)."""
    if k < 3:
        raise DomainTooSmall(f"k must be >= 3, got {k}")
    return 1 + k / math.sqrt(k - 1)


def theta_ell_complement(d: int, ell: int) -> float:
    """theta of the complement when every pair has exactly ``ell`` common neighbours."""
    if d <= ell:
        raise DomainTooSmall(f"need d > ell, got d={d}, ell={ell}")
    return 1 + d / math.sqrt(d - ell)


def theta_ell(n: int, d: int, ell: int) -> float:
    if d <= ell:
        raise DomainTooSmall(f"need d > ell, got d={d}, ell={ell}")
    r = math.sqrt(d - ell)
    return n * r / (d + r)


def theta_regular_bounds(
    n: int, d: int, lambda2: float, lambdamin: float
) -> tuple[ThetaBounds, ThetaBounds]:
    """Eigenvalue bounds on theta(G) and theta(complement G) for a d-regular graph.

    ``lambda2`` is the second largest adjacency eigenvalue, ``lambdamin`` the
    least.  Returns ``(bounds for G, bounds for complement)``.
    """
    if not (0 < d < n - 1) or lambda2 <= -1 or lambdamin >= 0:
        raise DegenerateGraph(
            f"bounds need a noncomplete nonempty regular graph (n={n}, d={d}, "
            f"lambda2={lambda2}, lambdamin={lambdamin})"
        )
    g = ThetaBounds(
        (n - d + lambda2) / (1 + lambda2),
        -n * lambdamin / (d - lambdamin),
        ThetaMethod.REGULAR_EIG_BOUNDS,
    )
    gbar = ThetaBounds(
        1 - d / lambdamin,
        n * (1 + lambda2) / (n - d + lambda2),
        ThetaMethod.REGULAR_EIG_BOUNDS,
    )
    return g, gbar


def theta_cycle(length: int) -> float:
    if length < 3:
        raise DomainTooSmall(f"cycle length must be >= 3, got {length}")
    if length % 2 == 0:
        return length / 2
    return length / (1 + 1 / math.cos(math.pi / length))


# ---------------------------------------------------------------------------
# SDP


@dataclass(frozen=True)
class SdpResult:
    value: float
    primal_value: float
    dual_value: float
    duality_gap: float
    primal_residual: float
    dual_residual: float
    iterations: int


def _max_step(x_chol: np.ndarray, dx: np.ndarray) -> float:
    """Largest alpha <= 1 with X + alpha dX positive semidefinite (X = L L^T)."""
    tmp = solve_triangular(x_chol, dx, lower=True)
    s = solve_triangular(x_chol, tmp.T, lower=True)
    lam_min = np.linalg.eigvalsh((s + s.T) / 2)[0]
    return 1.0 if lam_min >= 0 else min(1.0, -1.0 / lam_min)


def _factor_schur(s: np.ndarray, it: int):
    # symmetric diagonal scaling; the Schur diagonal spreads over many decades near the optimum
    scale = 1.0 / np.sqrt(np.abs(np.diag(s)))
    scaled = s * scale[:, None] * scale[None, :]
    try:
        chol = cho_factor(scaled)
        return lambda rhs: scale * cho_solve(chol, scale * rhs)
    except np.linalg.LinAlgError:
        pass
    lu = lu_factor(scaled, check_finite=False)
    if not np.all(np.isfinite(lu[0])) or np.min(np.abs(np.diag(lu[0]))) == 0:
        raise NotConverged(f"singular Schur complement at iteration {it}")
    return lambda rhs: scale * lu_solve(lu, scale * rhs)


def theta_sdp(g: Graph, tol: float = 1e-7, max_iter: int = 500) -> SdpResult:
    """theta(G) from  max <J, B>  s.t.  tr B = 1,  B_ij = 0 on edges,  B PSD.

    Primal-dual path following (HKM direction, Mehrotra predictor-corrector)
    on the pair

        primal:  max <J, X>   s.t.  A(X) = e_0,  X PSD
        dual:    min y_0      s.t.  Z = y_0 I + sum_ij y_ij (E_ij + E_ji) - J PSD

    started from the strictly feasible point X = I/n, y_0 = n + 1.  Stops when
    the duality gap and both residuals are below ``tol``; the reported value is
    the midpoint of the primal and dual objectives.
    """
    n = g.order
    if n > SDP_ORDER_CAP:
        raise TooLarge(f"theta_sdp is capped at order {SDP_ORDER_CAP}, got {n}")
    if not 1e-10 <= tol <= 1e-2:
        raise ValueError(f"tol must lie in [1e-10, 1e-2], got {tol}")

    edges = np.array(g.edges(), dtype=int).reshape(-1, 2)
    ei, ej = edges[:, 0], edges[:, 1]
    m = 1 + len(edges)
    eye = np.eye(n)
    c = np.ones((n, n))
    b = np.zeros(m)
    b[0] = 1.0

    def op(mat):
        out = np.empty(m)
        out[0] = np.trace(mat)
        out[1:] = mat[ei, ej] + mat[ej, ei]
        return out

    def op_t(y):
        out = y[0] * eye
        out[ei, ej] += y[1:]
        out[ej, ei] += y[1:]
        return out

    def schur(x, w):
        # entry (k, l) is <A_k, X A_l W>
        s = np.empty((m, m))
        s[0, 0] = np.sum(x * w)
        xw = x @ w
        col = xw[ei, ej] + xw[ej, ei]
        s[0, 1:] = col
        s[1:, 0] = col
        if len(edges):
            s[1:, 1:] = (
                x[np.ix_(ei, ei)] * w[np.ix_(ej, ej)]
                + x[np.ix_(ei, ej)] * w[np.ix_(ej, ei)]
                + x[np.ix_(ej, ei)] * w[np.ix_(ei, ej)]
                + x[np.ix_(ej, ej)] * w[np.ix_(ei, ei)]
            )
        return s

    x = eye / n
    y = np.zeros(m)
    y[0] = n + 1.0
    z = op_t(y) - c

    for it in range(max_iter + 1):
        rp = b - op(x)
        rd = c - op_t(y) + z
        pobj = float(np.sum(x))
        dobj = float(y[0])
        gap = float(np.sum(x * z))
        p_res = float(np.linalg.norm(rp))
        d_res = float(np.linalg.norm(rd))
        if gap < tol and abs(dobj - pobj) < tol and p_res < tol and d_res < tol:
            return SdpResult((pobj + dobj) / 2, pobj, dobj, abs(dobj - pobj), p_res, d_res, it)
        if it == max_iter:
            break
        try:
            w = cho_solve(cho_factor(z, lower=True), eye)
            w = (w + w.T) / 2
            solve = _factor_schur(schur(x, w), it)
            base = op(x @ rd @ w) - rp
            mu = gap / n

            # predictor
            dy = solve(op(-x) + base)
            dz = op_t(dy) - rd
            dx = -x - x @ dz @ w
            dx = (dx + dx.T) / 2
            xl = np.linalg.cholesky(x)
            zl = np.linalg.cholesky(z)
            ap = _max_step(xl, dx)
            ad = _max_step(zl, dz)
            mu_aff = float(np.sum((x + ap * dx) * (z + ad * dz))) / n
            sigma = min(1.0, (mu_aff / mu) ** 3) if mu > 0 else 0.0

            # corrector
            corr = sigma * mu * w - x - dx @ dz @ w
            dy = solve(op(corr) + base)
            dz = op_t(dy) - rd
            dx = corr - x @ dz @ w
            dx = (dx + dx.T) / 2
            ap = min(1.0, 0.98 * _max_step(xl, dx))
            ad = min(1.0, 0.98 * _max_step(zl, dz))
        except np.linalg.LinAlgError as exc:
            raise NotConverged(
                f"numerical breakdown at iteration {it} (gap {gap:.3g}, tol {tol:.3g})"
            ) from exc
        x = x + ap * dx
        y = y + ad * dy
        z = z + ad * dz
        x = (x + x.T) / 2
        z = (z + z.T) / 2

    raise NotConverged(f"theta_sdp did not reach tol={tol} within {max_iter} iterations")
