import math
import time
from fractions import Fraction

import pytest

from hipstergf.families import BoundKind, Family
from hipstergf.known_gfs import DomainError, KnownGf, expand
from hipstergf.recurrences import exact_series, family_params
from hipstergf.series import make_series
from hipstergf.singularity import (
    RootFindingError,
    branch_limit,
    closed_form_binary_roots,
    discriminant,
    empirical_growth,
    find_dominant_singularity,
    growth_interval,
)

B, O, C = Family.BINARY, Family.ONE_TWO, Family.COLORED
U, L = BoundKind.UPPER, BoundKind.LOWER

# Pole constant k of the chain series: 1 - Sub(t) = -t / (1 - k t).
CHAIN_POLE = {B: 2, O: 1, C: 3}


def cleared_upper_discriminant(family, x: Fraction) -> Fraction:
    """(1 - k x^2) * D(x) for the chain-substituted equation, in exact arithmetic."""
    p = family_params(family)
    k = CHAIN_POLE[family]
    t = x * x
    q = 1 - k * t
    return (p.beta * x + 1) ** 2 * q - 4 * p.alpha * x * (x * p.c0 * q - x * p.gamma * t + q)


def test_discriminant_examples():
    assert discriminant(B, U, 0.0) == 1.0
    assert discriminant(B, L, 0.0) == 1.0
    x = (4 - math.sqrt(3)) / 13
    assert abs(discriminant(C, U, x)) < 1e-12


def test_discriminant_matches_displayed_binary_forms():
    for x in (0.05, 0.2, 0.3):
        assert discriminant(B, U, x) == pytest.approx(1 - 4 * x + 4 * x**4 / (1 - 2 * x * x), rel=1e-13)
        assert discriminant(B, L, x) == pytest.approx(
            3 - 2 * math.sqrt(1 - 4 * x * x) - 4 * x * x - 4 * x, abs=1e-14
        )
        assert discriminant(C, U, x) == pytest.approx(
            (x + 1) ** 2 - 8 * x + 16 * x**4 / (1 - 3 * x * x), rel=1e-13
        )


def test_discriminant_rejects_exact_kind():
    with pytest.raises(ValueError):
        discriminant(B, BoundKind.EXACT, 0.1)


def test_discriminant_domain_error():
    with pytest.raises(DomainError):
        discriminant(B, L, 0.6)


def test_branch_limits():
    assert branch_limit(B, L) == pytest.approx(0.5)
    assert branch_limit(C, L) == pytest.approx(math.sqrt(2) - 1, abs=1e-15)
    assert branch_limit(O, U) == 1.0
    assert branch_limit(B, U) == pytest.approx(1 / math.sqrt(2))
    assert branch_limit(C, U) == pytest.approx(1 / math.sqrt(3))
    assert branch_limit(O, L) == pytest.approx(1 / math.sqrt(3))


@pytest.mark.parametrize("family", list(Family))
def test_upper_roots_certified_by_exact_polynomial(family):
    res = find_dominant_singularity(family, U, 1e-12)
    lo = Fraction(res.rho) - Fraction(1, 10**9)
    hi = Fraction(res.rho) + Fraction(1, 10**9)
    assert cleared_upper_discriminant(family, lo) > 0 > cleared_upper_discriminant(family, hi)
    # and no earlier sign change on a fine exact grid
    for j in range(1, 200):
        x = Fraction(j, 200) * lo
        assert cleared_upper_discriminant(family, x) > 0


@pytest.mark.parametrize(
    "family, kind, rho",
    [(B, U, 0.254848), (O, U, 0.350277), (O, L, 0.354047), (C, U, 0.174458), (C, L, 0.174465)],
)
def test_published_roots(family, kind, rho):
    assert find_dominant_singularity(family, kind).rho == pytest.approx(rho, abs=1e-6)


@pytest.mark.parametrize("family", list(Family))
@pytest.mark.parametrize("kind", [U, L])
def test_result_invariants(family, kind):
    res = find_dominant_singularity(family, kind, 1e-12)
    assert res.bracket_lo < res.rho < res.bracket_hi
    assert res.width <= 1e-12
    assert (discriminant(family, kind, res.bracket_lo) > 0) != (discriminant(family, kind, res.bracket_hi) > 0)
    assert abs(res.residual) <= 1e-10
    assert res.growth * res.rho == pytest.approx(1.0, rel=1e-15)
    assert res.rho < branch_limit(family, kind)


def test_coarse_tolerance_is_respected():
    res = find_dominant_singularity(B, U, 1e-4)
    assert res.width <= 1e-4
    assert res.rho == pytest.approx(0.254848, abs=1e-4)


def test_tol_must_be_positive():
    with pytest.raises(ValueError):
        find_dominant_singularity(B, U, 0.0)


@pytest.mark.parametrize(
    "family, interval, total_growth",
    [
        (B, (3.923450, 3.923909), 4.0),
        (O, (2.824486, 2.854882), 3.0),
        (C, (5.731821, 5.732051), 3 + 2 * math.sqrt(2)),
    ],
)
def test_growth_interval(family, interval, total_growth):
    gi = growth_interval(family)
    assert gi.lower == pytest.approx(interval[0], abs=1e-5)
    assert gi.upper == pytest.approx(interval[1], abs=1e-5)
    assert gi.lower <= gi.upper
    assert gi.rho_lower_eq >= gi.rho_upper_eq
    assert 1 < gi.lower and gi.upper < total_growth + 1e-3


def test_closed_form_binary_roots():
    upper, lower = closed_form_binary_roots()
    assert upper == pytest.approx(0.254848, abs=1e-6)
    assert abs(upper - find_dominant_singularity(B, U).rho) < 1e-9
    # the cube-root expression is only reported, not asserted to equal the root
    assert math.isfinite(lower)


def test_empirical_growth_examples():
    assert empirical_growth(make_series([1] * 11, 10), 10) == 1.0
    # c_n / c_{n-1} = 2(2n-1)/(n+1) = 4 - 6/(n+1)
    assert empirical_growth(expand(KnownGf.CATALAN, 500), 500) == pytest.approx(2 * 999 / 501, rel=1e-15)
    assert abs(empirical_growth(expand(KnownGf.CATALAN, 500), 500) - 4) < 0.013
    assert 3.903 <= empirical_growth(exact_series(B, 500), 500) <= 3.944


def test_empirical_growth_errors():
    with pytest.raises(ValueError):
        empirical_growth(make_series([1, 0, 1], 2), 2)
    with pytest.raises(ValueError):
        empirical_growth(make_series([1, 1], 1), 2)


@pytest.mark.parametrize("family", list(Family))
def test_ratio_inside_widened_interval(family):
    gi = growth_interval(family)
    lo, hi = gi.widened(0.02)
    assert lo <= empirical_growth(exact_series(family, 500), 500) <= hi


def test_root_search_is_fast():
    start = time.perf_counter()
    for family in Family:
        growth_interval(family)
    assert time.perf_counter() - start < 1.0


def test_no_sign_change_reported(monkeypatch):
    import hipstergf.singularity as sing

    monkeypatch.setattr(sing, "discriminant", lambda f, k, x: 1.0)
    with pytest.raises(RootFindingError):
        sing.find_dominant_singularity(B, U)
