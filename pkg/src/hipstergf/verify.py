"""One-shot verification run behind ``hipstergf verify``.

Every check is computed, never raised: a failing check is a ``Check`` with
``ok=False`` and a human-readable detail string.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Callable, Iterator, Mapping

from .families import BoundKind, Family
from .known_gfs import expand
from .recurrences import bound_series, exact_series, residual, sandwich_report, sub_gf, total_series
from .series import DEFAULT_ORDER
from .singularity import (
    DEFAULT_TOL,
    closed_form_binary_roots,
    discriminant,
    empirical_growth,
    find_dominant_singularity,
    growth_interval,
)
from .trees import census

DEFAULT_ORACLE_LIMITS = {Family.BINARY: 14, Family.ONE_TWO: 14, Family.COLORED: 12}

# Published growth intervals and the singularities quoted alongside them.
REFERENCE_INTERVALS = {
    Family.BINARY: (3.923450, 3.923909),
    Family.ONE_TWO: (2.824486, 2.854882),
    Family.COLORED: (5.731821, 5.732051),
}
REFERENCE_RHOS = {
    (Family.ONE_TWO, BoundKind.UPPER): 0.350277,
    (Family.ONE_TWO, BoundKind.LOWER): 0.354047,
    (Family.COLORED, BoundKind.UPPER): 0.174458,
    (Family.COLORED, BoundKind.LOWER): 0.174465,
}
ENDPOINT_TOL = 1e-5
RADICAL_TOL = 1e-9
COLORED_ROOT_TOL = 1e-10
SANDWICH_ORDER = 1000
RATIO_N = 500
RATIO_SLACK = 0.02


@dataclass(frozen=True)
class Check:
    section: str
    name: str
    ok: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return asdict(self)


def oracle_checks(limits: Mapping[Family, int]) -> Iterator[Check]:
    for family in Family:
        limit = limits[family]
        h = exact_series(family, limit).integers()
        bad = []
        for n in range(limit + 1):
            brute = census(family, n, limit=max(limit, n))[1]
            if brute != h[n]:
                bad.append(f"n={n}: recurrence {h[n]} vs brute force {brute}")
        yield Check("oracle", f"{family.value} n<={limit}", not bad, "; ".join(bad[:3]))


def total_checks(limits: Mapping[Family, int]) -> Iterator[Check]:
    for family in Family:
        limit = limits[family]
        tot = total_series(family, limit).integers()
        bad = []
        for n in range(limit + 1):
            brute = census(family, n, limit=max(limit, n))[0]
            if brute != tot[n]:
                bad.append(f"n={n}: series {tot[n]} vs brute force {brute}")
        yield Check("totals", f"{family.value} n<={limit}", not bad, "; ".join(bad[:3]))


def growth_checks(tol: float = DEFAULT_TOL) -> Iterator[Check]:
    for family in Family:
        gi = growth_interval(family, tol)
        ref_lo, ref_hi = REFERENCE_INTERVALS[family]
        for label, got, ref in (("lower", gi.lower, ref_lo), ("upper", gi.upper, ref_hi)):
            err = abs(got - ref)
            yield Check(
                "growth", f"{family.value} {label}", err <= ENDPOINT_TOL, f"{got:.9f} vs {ref} (|diff|={err:.2e})"
            )
        for kind, res in ((BoundKind.LOWER, gi.lower_result), (BoundKind.UPPER, gi.upper_result)):
            ref = REFERENCE_RHOS.get((family, kind))
            if ref is not None:
                err = abs(res.rho - ref)
                yield Check(
                    "growth",
                    f"{family.value} rho {kind.value}",
                    err <= ENDPOINT_TOL,
                    f"{res.rho:.9f} vs {ref} (|diff|={err:.2e})",
                )


def closed_form_checks(tol: float = DEFAULT_TOL) -> Iterator[Check]:
    upper_radical, lower_radical = closed_form_binary_roots()
    up = find_dominant_singularity(Family.BINARY, BoundKind.UPPER, tol)
    err = abs(upper_radical - up.rho)
    yield Check("closed_form", "binary upper radical", err < RADICAL_TOL, f"|diff|={err:.2e}")

    x = (4.0 - math.sqrt(3.0)) / 13.0
    d = discriminant(Family.COLORED, BoundKind.UPPER, x)
    yield Check("closed_form", "colored upper root (4-sqrt3)/13", abs(d) < COLORED_ROOT_TOL, f"D={d:.2e}")

    lo = find_dominant_singularity(Family.BINARY, BoundKind.LOWER, tol)
    yield Check(
        "closed_form",
        "binary lower cube-root radical (reported only)",
        True,
        f"|diff|={abs(lower_radical - lo.rho):.2e}",
    )


def sandwich_checks(order: int = SANDWICH_ORDER) -> Iterator[Check]:
    for family in Family:
        report = sandwich_report(family, order)
        fails = report.failures
        detail = "" if not fails else f"first failure at n={fails[0].n}"
        yield Check("sandwich", f"{family.value} n<={order}", report.ok, detail)


def residual_checks(order: int = DEFAULT_ORDER) -> Iterator[Check]:
    for family in Family:
        h = exact_series(family, order)
        yield _residual_check(family, BoundKind.EXACT, h, h)
        for kind in (BoundKind.UPPER, BoundKind.LOWER):
            y = bound_series(family, kind, order)
            yield _residual_check(family, kind, y, expand(sub_gf(family, kind), order))


def _residual_check(family, kind, y, sub_series) -> Check:
    r = residual(family, y, sub_series)
    nonzero = [n for n, c in enumerate(r) if c != 0]
    detail = "" if not nonzero else f"nonzero at n={nonzero[0]}"
    return Check("residual", f"{family.value} {kind.value} order {y.order}", not nonzero, detail)


def ratio_checks(tol: float = DEFAULT_TOL, n: int = RATIO_N) -> Iterator[Check]:
    for family in Family:
        ratio = empirical_growth(exact_series(family, n), n)
        lo, hi = growth_interval(family, tol).widened(RATIO_SLACK)
        yield Check("ratio", f"{family.value} n={n}", lo <= ratio <= hi, f"{ratio:.6f} in [{lo:.6f}, {hi:.6f}]")


def run_all(
    *,
    oracle_limits: Mapping[Family, int] = DEFAULT_ORACLE_LIMITS,
    order: int = DEFAULT_ORDER,
    tol: float = DEFAULT_TOL,
) -> list[Check]:
    sections: list[Callable[[], Iterator[Check]]] = [
        lambda: oracle_checks(oracle_limits),
        lambda: total_checks(oracle_limits),
        lambda: growth_checks(tol),
        lambda: closed_form_checks(tol),
        lambda: sandwich_checks(),
        lambda: residual_checks(order),
        lambda: ratio_checks(tol),
    ]
    checks: list[Check] = []
    for section in sections:
        try:
            checks.extend(section())
        except Exception as exc:  # report, don't abort the run
            checks.append(Check("error", type(exc).__name__, False, str(exc)))
    return checks
