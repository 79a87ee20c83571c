"""Closed-form generating functions used as ingredients of the bounds.

Each :class:`KnownGf` has an exact series expansion (:func:`expand`) and a
real-valued evaluator (:func:`eval_real`). The algebraic ones (Catalan,
Motzkin, little Schroeder) are expanded from their radicals through
:func:`~hipstergf.series.sqrt_series`; the chain families are geometric and
written out directly. Every expansion has constant term 1 (the empty tree).
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction

from .series import PowerSeries, make_series, monomial, scale, shift_down, sqrt_series, sub

__all__ = ["KnownGf", "DomainError", "expand", "eval_real", "domain_limit"]


class DomainError(ValueError):
    """A real evaluation left the domain of a radicand or hit a pole."""


class KnownGf(enum.Enum):
    CATALAN = "catalan"
    MOTZKIN = "motzkin"
    SCHROEDER_LITTLE = "schroeder_little"
    CHAIN_BINARY = "chain_binary"
    CHAIN_ONE_TWO = "chain_one_two"
    CHAIN_COLORED = "chain_colored"


def _poly(coeffs: list[int], order: int) -> PowerSeries:
    padded = (coeffs + [0] * (order + 1))[: order + 1]
    return make_series(padded, order)


def expand(gf: KnownGf, order: int) -> PowerSeries:
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")

    if gf is KnownGf.CATALAN:
        # (1 - sqrt(1 - 4x)) / (2x)
        root = sqrt_series(_poly([1, -4], order + 1))
        return scale(shift_down(sub(monomial(0, order + 1), root), 1), Fraction(1, 2))

    if gf is KnownGf.MOTZKIN:
        # (1 - x - sqrt(1 - 2x - 3x^2)) / (2x^2)
        root = sqrt_series(_poly([1, -2, -3], order + 2))
        return scale(shift_down(sub(_poly([1, -1], order + 2), root), 2), Fraction(1, 2))

    if gf is KnownGf.SCHROEDER_LITTLE:
        # (1 + x - sqrt(1 - 6x + x^2)) / (4x)
        root = sqrt_series(_poly([1, -6, 1], order + 1))
        return scale(shift_down(sub(_poly([1, 1], order + 1), root), 1), Fraction(1, 4))

    if gf is KnownGf.CHAIN_BINARY:
        return make_series([1] + [2 ** (n - 1) for n in range(1, order + 1)], order)
    if gf is KnownGf.CHAIN_ONE_TWO:
        return make_series([1] * (order + 1), order)
    if gf is KnownGf.CHAIN_COLORED:
        return make_series([1] + [3 ** (n - 1) for n in range(1, order + 1)], order)

    raise ValueError(f"unsupported generating function {gf!r}")


# Largest x in the real domain. Radicand domains are closed, poles are open.
_LIMITS = {
    KnownGf.CATALAN: (0.25, True, "radicand 1-4x"),
    KnownGf.MOTZKIN: (1.0 / 3.0, True, "radicand 1-2x-3x^2"),
    KnownGf.SCHROEDER_LITTLE: (3.0 - 2.0 * math.sqrt(2.0), True, "radicand 1-6x+x^2"),
    KnownGf.CHAIN_BINARY: (0.5, False, "pole of x/(1-2x)"),
    KnownGf.CHAIN_ONE_TWO: (1.0, False, "pole of 1/(1-x)"),
    KnownGf.CHAIN_COLORED: (1.0 / 3.0, False, "pole of x/(1-3x)"),
}


def domain_limit(gf: KnownGf) -> float:
    """Right end of the real domain on x >= 0 (radicand zero or pole)."""
    return _LIMITS[gf][0]


def _radicand(gf: KnownGf, x: float) -> float:
    if gf is KnownGf.CATALAN:
        r = 1.0 - 4.0 * x
    elif gf is KnownGf.MOTZKIN:
        r = 1.0 - 2.0 * x - 3.0 * x * x
    else:
        r = 1.0 - 6.0 * x + x * x
    if r < 0.0:
        if r > -1e-15:  # rounding at the domain endpoint itself
            return 0.0
        raise DomainError(f"{gf.value}: {_LIMITS[gf][2]} is negative at x={x!r}")
    return r


def eval_real(gf: KnownGf, x: float) -> float:
    """Evaluate the closed form at a real point ``0 <= x`` inside the domain.

    The radical forms are used in their rationalized shape, e.g.
    ``C(x) = 2 / (1 + sqrt(1 - 4x))``; these are equal to the textbook
    expressions but carry no cancellation near 0 and give the limit 1 at 0.
    """
    x = float(x)
    if x < 0.0 or math.isnan(x):
        raise DomainError(f"{gf.value}: evaluation point must be >= 0, got {x!r}")
    limit, closed, what = _LIMITS[gf]
    if x > limit or (x == limit and not closed):
        raise DomainError(f"{gf.value}: x={x!r} is beyond the {what} at {limit!r}")

    if gf is KnownGf.CATALAN:
        return 2.0 / (1.0 + math.sqrt(_radicand(gf, x)))
    if gf is KnownGf.MOTZKIN:
        return 2.0 / (1.0 - x + math.sqrt(_radicand(gf, x)))
    if gf is KnownGf.SCHROEDER_LITTLE:
        return 2.0 / (1.0 + x + math.sqrt(_radicand(gf, x)))
    if gf is KnownGf.CHAIN_BINARY:
        return 1.0 + x / (1.0 - 2.0 * x)
    if gf is KnownGf.CHAIN_ONE_TWO:
        return 1.0 / (1.0 - x)
    return 1.0 + x / (1.0 - 3.0 * x)
