"""Truncated formal power series with exact rational coefficients.

A :class:`PowerSeries` of order ``N`` stores ``a_0 .. a_N``; everything above
``x^N`` is discarded. Binary operations demand equal orders and raise
:class:`OrderMismatchError` otherwise, so an off-by-one around ``x -> x^2``
shows up as an exception rather than a silently shorter series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

__all__ = [
    "DEFAULT_ORDER",
    "OrderMismatchError",
    "PowerSeries",
    "make_series",
    "zero",
    "one",
    "monomial",
    "add",
    "sub",
    "scale",
    "mul",
    "substitute_square",
    "sqrt_series",
    "shift_down",
    "coefficient",
    "truncate",
]

DEFAULT_ORDER = 512

Number = Union[int, Fraction]


class OrderMismatchError(ValueError):
    pass


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficient must be an exact rational, got {type(c).__name__}")


@dataclass(frozen=True)
class PowerSeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def is_integral(self) -> bool:
        """True when every coefficient has denominator 1."""
        return all(c.denominator == 1 for c in self.coeffs)

    def integers(self) -> list[int]:
        """Coefficients as Python ints; raises if any is not integral."""
        if not self.is_integral():
            raise ValueError("series has non-integer coefficients")
        return [c.numerator for c in self.coeffs]

    def __getitem__(self, n: int) -> Fraction:
        return coefficient(self, n)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: PowerSeries) -> PowerSeries:
        return add(self, other)

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        return sub(self, other)

    def __mul__(self, other) -> PowerSeries:
        if isinstance(other, PowerSeries):
            return mul(self, other)
        return scale(self, other)

    def __rmul__(self, other) -> PowerSeries:
        return scale(self, other)

    def __neg__(self) -> PowerSeries:
        return scale(self, -1)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if len(self.coeffs) > 8 else ""
        return f"PowerSeries([{shown}{tail}], order={self.order})"


def make_series(coeffs: Iterable[Number], order: int) -> PowerSeries:
    values = tuple(_as_fraction(c) for c in coeffs)
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    if len(values) != order + 1:
        raise ValueError(f"expected {order + 1} coefficients for order {order}, got {len(values)}")
    return PowerSeries(values)


def zero(order: int) -> PowerSeries:
    return PowerSeries((Fraction(0),) * (order + 1))


def one(order: int) -> PowerSeries:
    return monomial(0, order)


def monomial(k: int, order: int, c: Number = 1) -> PowerSeries:
    """The series ``c * x^k`` truncated at ``order`` (zero if ``k > order``)."""
    coeffs = [Fraction(0)] * (order + 1)
    if k <= order:
        coeffs[k] = _as_fraction(c)
    return PowerSeries(tuple(coeffs))


def _check_orders(a: PowerSeries, b: PowerSeries) -> None:
    if a.order != b.order:
        raise OrderMismatchError(f"order mismatch: {a.order} vs {b.order}")


def truncate(a: PowerSeries, order: int) -> PowerSeries:
    if not 0 <= order <= a.order:
        raise ValueError(f"cannot truncate order {a.order} series to {order}")
    return PowerSeries(a.coeffs[: order + 1])


def add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    _check_orders(a, b)
    return PowerSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def sub(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    _check_orders(a, b)
    return PowerSeries(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def scale(a: PowerSeries, c: Number) -> PowerSeries:
    c = _as_fraction(c)
    return PowerSeries(tuple(c * x for x in a.coeffs))


def _convolve_int(u: Sequence[int], v: Sequence[int]) -> list[int]:
    n = len(u)
    return [sum(u[i] * v[k - i] for i in range(k + 1)) for k in range(n)]


def mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Truncated Cauchy product."""
    _check_orders(a, b)
    # Integer series (every counting series here) skip Fraction overhead.
    if a.is_integral() and b.is_integral():
        prod = _convolve_int([c.numerator for c in a.coeffs], [c.numerator for c in b.coeffs])
        return PowerSeries(tuple(Fraction(c) for c in prod))
    ac, bc = a.coeffs, b.coeffs
    return PowerSeries(
        tuple(sum((ac[i] * bc[k - i] for i in range(k + 1)), Fraction(0)) for k in range(len(ac)))
    )


def substitute_square(a: PowerSeries) -> PowerSeries:
    """``a(x^2)`` at the same order: even slot ``2k`` gets ``a_k``, odd slots are 0."""
    coeffs = [Fraction(0)] * (a.order + 1)
    for k in range(a.order // 2 + 1):
        coeffs[2 * k] = a.coeffs[k]
    return PowerSeries(tuple(coeffs))


def sqrt_series(a: PowerSeries) -> PowerSeries:
    """Square root with constant term 1.

    Solves ``s^2 = a`` coefficient by coefficient:
    ``2 s_n = a_n - sum_{i=1}^{n-1} s_i s_{n-i}``.
    """
    if a.coeffs[0] != 1:
        raise ValueError(f"sqrt_series needs constant term 1, got {a.coeffs[0]}")
    # Stay on ints while every halving is exact; Fractions only after that.
    exact_int = a.is_integral()
    target = [c.numerator for c in a.coeffs] if exact_int else list(a.coeffs)
    s = [1] if exact_int else [Fraction(1)]
    for n in range(1, a.order + 1):
        acc = target[n] - sum(s[i] * s[n - i] for i in range(1, n))
        if exact_int and acc % 2:
            exact_int = False
            target = list(a.coeffs)
            s = [Fraction(v) for v in s]
            acc = Fraction(acc)
        s.append(acc // 2 if exact_int else acc / 2)
    return PowerSeries(tuple(Fraction(v) for v in s))


def shift_down(a: PowerSeries, k: int) -> PowerSeries:
    """Divide by ``x^k``; the leading ``k`` coefficients must vanish. Order drops by ``k``."""
    if k < 0 or k > a.order:
        raise ValueError(f"cannot divide an order {a.order} series by x^{k}")
    if any(a.coeffs[:k]):
        raise ValueError(f"series is not divisible by x^{k}")
    return PowerSeries(a.coeffs[k:])


def coefficient(a: PowerSeries, n: int) -> Fraction:
    if not 0 <= n <= a.order:
        raise IndexError(f"coefficient index {n} outside 0..{a.order}")
    return a.coeffs[n]
