"""Arithmetic screening of SRG parameter vectors and the complement map.

Every check here is necessary for existence, never sufficient: a passing
report means "arithmetically feasible", nothing more.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParams, NegativeParameter
from .graph import SrgParams


@dataclass(frozen=True)
class FeasibilityCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class FeasibilityReport:
    params: SrgParams
    checks: tuple[FeasibilityCheck, ...]

    @property
    def feasible(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def as_dict(self) -> dict:
        return {
            "params": list(self.params.as_tuple()),
            "feasible": self.feasible,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks
            ],
        }

    def render(self) -> str:
        verdict = "arithmetically feasible" if self.feasible else "infeasible"
        lines = [f"{self.params}: {verdict}"]
        lines += [f"  [{'ok' if c.passed else 'FAIL'}] {c.name}: {c.detail}" for c in self.checks]
        return "\n".join(lines)


def _multiplicity_checks(p: SrgParams) -> list[FeasibilityCheck]:
    n, d, lam, mu = p.as_tuple()
    num = 2 * d + (n - 1) * (lam - mu)
    t2 = p.t_squared
    t = p.t_exact
    name_int = "multiplicity integrality"
    name_nonneg = "multiplicity nonnegativity"
    if t2 == 0:
        detail = "t = 0, eigenvalue multiplicities undefined"
        return [FeasibilityCheck(name_int, False, detail), FeasibilityCheck(name_nonneg, False, detail)]
    if t is None:
        # irrational t: n-1 -/+ num/t can only be integral when num = 0
        ok = num == 0 and (n - 1) % 2 == 0
        detail = (
            f"t = sqrt({t2}) irrational; 2d+(n-1)(lambda-mu) = {num}"
            + ("; conference case with n-1 even" if ok else "; must be 0 with n-1 even")
        )
        return [
            FeasibilityCheck(name_int, ok, detail),
            FeasibilityCheck(name_nonneg, ok, "multiplicities (n-1)/2 each" if ok else detail),
        ]
    if num % t:
        detail = f"t = {t} does not divide 2d+(n-1)(lambda-mu) = {num}"
        return [
            FeasibilityCheck(name_int, False, detail),
            FeasibilityCheck(name_nonneg, (n - 1) * t >= abs(num), f"|{num}/{t}| vs n-1 = {n - 1}"),
        ]
    two_m1 = n - 1 - num // t
    two_m2 = n - 1 + num // t
    return [
        FeasibilityCheck(
            name_int,
            two_m1 % 2 == 0,
            f"n-1 - (2d+(n-1)(lambda-mu))/t = {two_m1}",
        ),
        FeasibilityCheck(
            name_nonneg,
            two_m1 >= 0 and two_m2 >= 0,
            f"2*m1 = {two_m1}, 2*m2 = {two_m2}",
        ),
    ]


def feasibility(p: SrgParams) -> FeasibilityReport:
    """Counting identity, multiplicity integrality/nonnegativity, triangle divisibility."""
    n, d, lam, mu = p.as_tuple()
    if n < 2 or d < 1:
        raise InvalidParams(f"feasibility needs n >= 2 and d >= 1, got {p}")
    lhs, rhs = (n - d - 1) * mu, d * (d - lam - 1)
    checks = [
        FeasibilityCheck(
            "counting identity",
            lhs == rhs,
            f"(n-d-1)mu = {lhs}, d(d-lambda-1) = {rhs}",
        )
    ]
    checks += _multiplicity_checks(p)
    prod = n * d * lam
    checks.append(
        FeasibilityCheck("triangle divisibility", prod % 6 == 0, f"n*d*lambda = {prod}, mod 6 = {prod % 6}")
    )
    return FeasibilityReport(p, tuple(checks))


def complement_params(p: SrgParams) -> SrgParams:
    """``(n, n-d-1, n-2d+mu-2, n-2d+lambda)``."""
    n, d, lam, mu = p.as_tuple()
    out = (n, n - d - 1, n - 2 * d + mu - 2, n - 2 * d + lam)
    if min(out) < 0:
        raise NegativeParameter(f"complement of {p} has a negative parameter: {out}")
    try:
        return SrgParams(*out)
    except InvalidParams as exc:
        raise NegativeParameter(f"complement of {p} is not a valid parameter set: {out}") from exc
