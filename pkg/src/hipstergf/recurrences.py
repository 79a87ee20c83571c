"""Coefficients of the hipster series and its two bounding series.

All three families share the functional equation

    Y = x * (alpha*Y^2 - beta*Y - gamma*(Sub(x^2) - 1) + c0) + 1

where ``Sub`` is ``Y`` itself for the exact count, the family's chain series
for the upper bound and the family's total count for the lower bound.
Reading off ``[x^n]`` gives, for ``n >= 1``,

    y_n = alpha * sum_{i<n} y_i y_{n-1-i} - beta * y_{n-1}
          - gamma * [n odd, n >= 3] * sub_{(n-1)/2} + c0 * [n == 1]

which is what :func:`_solve` runs on Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .families import BoundKind, Family
from .known_gfs import KnownGf, expand
from .series import (
    DEFAULT_ORDER,
    PowerSeries,
    add,
    make_series,
    monomial,
    mul,
    scale,
    sub,
    substitute_square,
)

__all__ = [
    "FamilyParams",
    "family_params",
    "sub_gf",
    "exact_series",
    "bound_series",
    "total_series",
    "residual",
    "SandwichRow",
    "SandwichReport",
    "sandwich_report",
]


@dataclass(frozen=True)
class FamilyParams:
    alpha: int
    beta: int
    gamma: int
    c0: int


_PARAMS = {
    Family.BINARY: FamilyParams(1, 0, 1, 0),
    Family.ONE_TWO: FamilyParams(1, 1, 1, 1),
    Family.COLORED: FamilyParams(2, 1, 2, 0),
}

_UPPER_SUB = {
    Family.BINARY: KnownGf.CHAIN_BINARY,
    Family.ONE_TWO: KnownGf.CHAIN_ONE_TWO,
    Family.COLORED: KnownGf.CHAIN_COLORED,
}

_LOWER_SUB = {
    Family.BINARY: KnownGf.CATALAN,
    Family.ONE_TWO: KnownGf.MOTZKIN,
    Family.COLORED: KnownGf.SCHROEDER_LITTLE,
}


def family_params(family: Family) -> FamilyParams:
    return _PARAMS[Family.parse(family)]


def sub_gf(family: Family, kind: BoundKind) -> KnownGf:
    """The known series standing in for ``H(x^2)`` in a bound equation."""
    family = Family.parse(family)
    if kind is BoundKind.UPPER:
        return _UPPER_SUB[family]
    if kind is BoundKind.LOWER:
        return _LOWER_SUB[family]
    raise ValueError("the exact equation has no substitute series")


def _solve(p: FamilyParams, order: int, sub_coeff: Optional[Callable[[int], int]] = None) -> list[int]:
    y = [1]
    for n in range(1, order + 1):
        # symmetric convolution: pair i with n-1-i once
        m = n - 1
        half = sum(y[i] * y[m - i] for i in range((m + 1) // 2))
        conv = 2 * half + (y[m // 2] ** 2 if m % 2 == 0 else 0)
        v = p.alpha * conv - p.beta * y[m]
        if n == 1:
            v += p.c0
        elif m % 2 == 0:
            k = m // 2
            v -= p.gamma * (y[k] if sub_coeff is None else sub_coeff(k))
        y.append(v)
    return y


def exact_series(family: Family, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Hipster counts ``h_0 .. h_order`` from the self-referential equation."""
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    return make_series(_solve(family_params(family), order), order)


def bound_series(family: Family, kind: BoundKind, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Upper (chain-substituted) or lower (total-substituted) bounding series.

    ``kind=BoundKind.EXACT`` is accepted as well and gives :func:`exact_series`.
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    family = Family.parse(family)
    if kind is BoundKind.EXACT:
        return exact_series(family, order)
    subs = expand(sub_gf(family, kind), order // 2).integers()
    return make_series(_solve(family_params(family), order, subs.__getitem__), order)


def total_series(family: Family, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Number of all ``n``-vertex trees of the family (no hipster condition)."""
    family = Family.parse(family)
    if family is Family.BINARY:
        return expand(KnownGf.CATALAN, order)
    if family is Family.COLORED:
        return expand(KnownGf.SCHROEDER_LITTLE, order)
    # m_k counts plane 1-2 trees on k+1 vertices, hence 1 + x*M(x)
    if order == 0:
        return make_series([1], 0)
    motz = expand(KnownGf.MOTZKIN, order - 1).integers()
    return make_series([1] + motz, order)


def residual(family: Family, y: PowerSeries, sub_series: PowerSeries) -> PowerSeries:
    """``alpha x Y^2 - (beta x + 1) Y - gamma x (Sub(x^2) - 1) + c0 x + 1``.

    Zero through the truncation order exactly when ``y`` solves the
    functional equation with ``sub_series`` in the substituted slot.
    """
    p = family_params(family)
    N = y.order
    x = monomial(1, N)
    one = monomial(0, N)
    sq = substitute_square(sub_series)
    out = scale(mul(x, mul(y, y)), p.alpha)
    out = sub(out, mul(add(scale(x, p.beta), one), y))
    out = sub(out, scale(mul(x, sub(sq, one)), p.gamma))
    out = add(out, add(scale(x, p.c0), one))
    return out


@dataclass(frozen=True)
class SandwichRow:
    n: int
    f: int
    h: int
    g: int
    total: int

    @property
    def ordered(self) -> bool:
        return 0 < self.f <= self.h <= self.g

    @property
    def within_total(self) -> bool:
        return self.h <= self.total and self.g <= self.total

    @property
    def ok(self) -> bool:
        return self.ordered and self.within_total


@dataclass(frozen=True)
class SandwichReport:
    family: Family
    order: int
    rows: Sequence[SandwichRow] = field(repr=False)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def failures(self) -> list[SandwichRow]:
        return [r for r in self.rows if not r.ok]


def sandwich_report(family: Family, order: int = DEFAULT_ORDER) -> SandwichReport:
    family = Family.parse(family)
    f = bound_series(family, BoundKind.LOWER, order).integers()
    h = exact_series(family, order).integers()
    g = bound_series(family, BoundKind.UPPER, order).integers()
    tot = total_series(family, order).integers()
    rows = [SandwichRow(n, f[n], h[n], g[n], tot[n]) for n in range(order + 1)]
    return SandwichReport(family, order, rows)
