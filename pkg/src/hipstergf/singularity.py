"""Dominant singularities of the bounding series and the growth intervals.

Each bound solves a quadratic ``a Y^2 + b Y + c = 0`` with

    a = alpha x,  b = -(beta x + 1),  c = x (c0 + gamma (1 - Sub(x^2))) + 1

so the solved branch stops being analytic where ``b^2 - 4ac`` first
vanishes. The root is bracketed by a coarse scan and then bisected; the final
bracket is kept in the result as the enclosure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .families import BoundKind, Family
from .known_gfs import domain_limit, eval_real
from .recurrences import family_params, sub_gf
from .series import PowerSeries

__all__ = [
    "DEFAULT_TOL",
    "SCAN_STEP",
    "RootFindingError",
    "SingularityResult",
    "GrowthInterval",
    "discriminant",
    "branch_limit",
    "find_dominant_singularity",
    "growth_interval",
    "closed_form_binary_roots",
    "empirical_growth",
]

DEFAULT_TOL = 1e-12
SCAN_STEP = 1e-3
_MAX_BISECTIONS = 200


class RootFindingError(RuntimeError):
    pass


@dataclass(frozen=True)
class SingularityResult:
    family: Family
    kind: BoundKind
    rho: float
    bracket_lo: float
    bracket_hi: float
    residual: float
    iterations: int

    @property
    def growth(self) -> float:
        return 1.0 / self.rho

    @property
    def width(self) -> float:
        return self.bracket_hi - self.bracket_lo


@dataclass(frozen=True)
class GrowthInterval:
    family: Family
    lower: float
    upper: float
    rho_lower_eq: float
    rho_upper_eq: float
    lower_result: SingularityResult
    upper_result: SingularityResult

    @property
    def bracket_width(self) -> float:
        return max(self.lower_result.width, self.upper_result.width)

    def widened(self, slack: float) -> tuple[float, float]:
        return self.lower - slack, self.upper + slack


def _bound_kind(kind: BoundKind) -> BoundKind:
    if kind not in (BoundKind.UPPER, BoundKind.LOWER):
        raise ValueError(f"discriminants exist for the upper and lower bounds only, not {kind.value}")
    return kind


def branch_limit(family: Family, kind: BoundKind) -> float:
    """Smallest x > 0 where ``Sub(x^2)`` stops being real-analytic."""
    gf = sub_gf(Family.parse(family), _bound_kind(kind))
    return math.sqrt(domain_limit(gf))


def discriminant(family: Family, kind: BoundKind, x: float) -> float:
    family = Family.parse(family)
    p = family_params(family)
    s = eval_real(sub_gf(family, _bound_kind(kind)), x * x)
    b = p.beta * x + 1.0
    c = x * (p.c0 + p.gamma * (1.0 - s)) + 1.0
    return b * b - 4.0 * p.alpha * x * c


def find_dominant_singularity(
    family: Family, kind: BoundKind, tol: float = DEFAULT_TOL
) -> SingularityResult:
    """Smallest positive zero of the discriminant, bracketed to width ``tol``."""
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    family = Family.parse(family)
    kind = _bound_kind(kind)
    limit = branch_limit(family, kind)

    def D(x: float) -> float:
        return discriminant(family, kind, x)

    # Grid points are k*step, not accumulated, so the scan is reproducible.
    lo, d_lo = 0.0, D(0.0)
    hi = None
    k = 1
    while k * SCAN_STEP < limit:
        x = k * SCAN_STEP
        d = D(x)
        if d == 0.0:
            return SingularityResult(family, kind, x, x, x, 0.0, 0)
        if (d < 0.0) != (d_lo < 0.0):
            hi = x
            break
        lo, d_lo = x, d
        k += 1
    if hi is None:
        raise RootFindingError(
            f"no sign change of the {kind.value} discriminant for {family.value} below {limit:.6g}"
        )

    iterations = 0
    while hi - lo > tol and iterations < _MAX_BISECTIONS:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # adjacent doubles
        d_mid = D(mid)
        iterations += 1
        if d_mid == 0.0:
            lo = hi = mid
            break
        if (d_mid < 0.0) == (d_lo < 0.0):
            lo, d_lo = mid, d_mid
        else:
            hi = mid

    rho = 0.5 * (lo + hi)
    if not lo <= rho <= hi < limit:
        raise RootFindingError(f"root {rho!r} is not below the branch limit {limit!r}")
    if lo < hi and (D(lo) < 0.0) == (D(hi) < 0.0):
        raise RootFindingError("final bracket lost its sign change")
    return SingularityResult(family, kind, rho, lo, hi, D(rho), iterations)


def growth_interval(family: Family, tol: float = DEFAULT_TOL) -> GrowthInterval:
    family = Family.parse(family)
    lo_res = find_dominant_singularity(family, BoundKind.LOWER, tol)
    up_res = find_dominant_singularity(family, BoundKind.UPPER, tol)
    return GrowthInterval(
        family=family,
        lower=lo_res.growth,
        upper=up_res.growth,
        rho_lower_eq=lo_res.rho,
        rho_upper_eq=up_res.rho,
        lower_result=lo_res,
        upper_result=up_res,
    )


def _cbrt(v: float) -> float:
    return math.copysign(abs(v) ** (1.0 / 3.0), v)


def closed_form_binary_roots() -> tuple[float, float]:
    """The two radical expressions for the binary roots: (upper eq, lower eq)."""
    r2 = math.sqrt(2.0)
    upper = (-2.0 - r2 + math.sqrt(14.0 + 4.0 * r2)) / 4.0
    r69 = math.sqrt(69.0)
    lower = (
        -20.0
        + _cbrt(6400.0 - 768.0 * r69)
        + 4.0 * 2.0 ** (2.0 / 3.0) * _cbrt(25.0 + 3.0 * r69)
    ) / 24.0
    return upper, lower


def empirical_growth(series: PowerSeries, n: int) -> float:
    """Ratio ``a_n / a_{n-1}`` of consecutive coefficients."""
    if not 1 <= n <= series.order:
        raise ValueError(f"n must lie in 1..{series.order}, got {n}")
    num, den = series[n], series[n - 1]
    if num <= 0 or den <= 0:
        raise ValueError(f"coefficients at {n - 1} and {n} must be positive")
    return float(num / den)
