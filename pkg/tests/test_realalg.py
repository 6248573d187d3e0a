from fractions import Fraction

import mpmath
import pytest

from core.errors import NotSquarefree, PeriodNotPrimitive, PrecisionExhausted, VanishesAtRoot
from core.polynomial import IntPolynomial, count_roots, sturm_chain
from core.realalg import (
    RationalInterval,
    build_period_field,
    certified_sign_at_root,
    match_roots,
    period_element,
    period_min_poly,
    sturm_isolate,
)
from core.resgroup import coset_decomposition, group_generator, make_modulus
from tests.conftest import prime_powers

x = IntPolynomial.x()
CUBIC_163 = IntPolynomial((-169, -54, 1, 1))


def cosets(p, d, n=1):
    return coset_decomposition(group_generator(make_modulus(p, n)), d)


def oracle_min_poly(c):
    """Expand prod (x - eta_j) numerically at 50 digits and round."""
    N = c.group.modulus.N
    with mpmath.workdps(50):
        etas = [sum(2 * mpmath.cos(2 * mpmath.pi * h / N) for h in coset) for coset in c.cosets]
        coeffs = [mpmath.mpf(1)]
        for eta in etas:
            shifted = [mpmath.mpf(0)] + coeffs
            for k, value in enumerate(coeffs):
                shifted[k] -= eta * value
            coeffs = shifted
        return IntPolynomial(tuple(int(mpmath.nint(value)) for value in coeffs))


def to_mpf(value: Fraction):
    return mpmath.mpf(value.numerator) / value.denominator


def numeric_roots(poly):
    with mpmath.workdps(50):
        roots = mpmath.polyroots(list(reversed(poly.coefficients)), maxsteps=200, extraprec=200)
        return sorted(mpmath.re(r) for r in roots)


def test_period_element_examples():
    one_coset = period_element(cosets(5, 1), 0)
    assert one_coset.is_rational() and one_coset.rational_value() == -1
    eta = period_element(cosets(7, 3), 0)
    # zeta^6 = -(1 + zeta + ... + zeta^5)
    assert eta.coords == (-1, 0, -1, -1, -1, -1)
    with pytest.raises(IndexError):
        period_element(cosets(7, 3), 3)


def test_min_poly_163_cubic():
    assert period_min_poly(cosets(163, 3)) == CUBIC_163


@pytest.mark.parametrize(
    "p, d, expected",
    [
        (5, 2, (-1, 1, 1)),
        (7, 3, (-1, -2, 1, 1)),
        (5, 1, (1, 1)),
        (13, 2, (-3, 1, 1)),
    ],
)
def test_min_poly_small(p, d, expected):
    assert period_min_poly(cosets(p, d)).coefficients == expected


@pytest.mark.parametrize("p, n", prime_powers(100))
def test_min_poly_matches_numeric_oracle(p, n):
    mod = make_modulus(p, n)
    half = mod.half_degree
    for d in [d for d in range(1, half + 1) if half % d == 0][:4]:
        c = coset_decomposition(group_generator(mod), d)
        poly = period_min_poly(c)
        assert poly == oracle_min_poly(c)
        assert poly.leading == 1 and poly.degree == d
        if n == 1 and p > 2:
            # the periods sum to the sum of all primitive p-th roots, -1
            assert poly.coefficients[d - 1] == 1


def test_sturm_isolate_examples():
    roots = sturm_isolate(x**2 - 2)
    assert len(roots) == 2
    assert roots[0].hi <= 0 <= roots[1].lo
    assert roots[0].contains(Fraction(-1414, 1000))
    assert roots[1].contains(Fraction(1414, 1000))
    assert sturm_isolate(x**2 + 1) == []
    cubic = sturm_isolate(CUBIC_163)
    assert len(cubic) == 3
    for left, right in zip(cubic, cubic[1:]):
        assert left.hi < right.lo
    chain = sturm_chain(CUBIC_163)
    assert all(count_roots(chain, iv.lo, iv.hi) == 1 for iv in cubic)


def test_sturm_isolate_rational_roots():
    p = (x - 1) * (x + 1) * x * (2 * x - 1)
    roots = sturm_isolate(p)
    assert len(roots) == 4
    for left, right in zip(roots, roots[1:]):
        assert left.hi < right.lo
    for value, interval in zip((-1, 0, Fraction(1, 2), 1), roots):
        assert interval.contains(Fraction(value))


def test_sturm_isolate_rejects_repeated_roots():
    with pytest.raises(NotSquarefree):
        sturm_isolate((x - 2) ** 2 * (x + 1))


def test_match_roots_golden_ratio():
    c = cosets(5, 2)
    mp = period_min_poly(c)
    pf = match_roots(c, mp, sturm_isolate(mp))
    # eta_0 = 2cos(72 deg) is the positive root of x^2 + x - 1
    assert pf.root_of_coset(0).lo >= 0
    assert pf.root_of_coset(1).hi <= 0
    assert sorted(pf.matching.values()) == [0, 1]


def test_match_roots_enclosures_hold_roots():
    c = cosets(163, 3)
    pf = build_period_field(c)
    N = 163
    with mpmath.workdps(40):
        for j, coset in enumerate(c.cosets):
            eta = sum(2 * mpmath.cos(2 * mpmath.pi * h / N) for h in coset)
            interval = pf.root_of_coset(j)
            assert to_mpf(interval.lo) < eta < to_mpf(interval.hi)
            assert abs(pf.min_poly.evaluate(eta)) < mpmath.mpf(10) ** -20


def test_match_roots_precision_ceiling():
    c = cosets(5, 2)
    mp = period_min_poly(c)
    # one coarse interval holding both roots cannot separate them at any precision
    coarse = [RationalInterval(-2, 1), RationalInterval(-2, 1)]
    with pytest.raises(PrecisionExhausted):
        match_roots(c, mp, coarse, initial_bits=32, max_bits=128)


def test_certified_sign_trivial_cases():
    roots = sturm_isolate(x**2 - 2)
    assert certified_sign_at_root(IntPolynomial.constant(1), x**2 - 2, roots[0]) == 1
    assert certified_sign_at_root(x, x**2 - 2, roots[1]) == 1
    assert certified_sign_at_root(x, x**2 - 2, roots[0]) == -1
    with pytest.raises(VanishesAtRoot):
        certified_sign_at_root(x**2 - 2, x**2 - 2, roots[0])
    with pytest.raises(VanishesAtRoot):
        certified_sign_at_root((x**2 - 2) * (x + 7), x**2 - 2, roots[1])


@pytest.mark.parametrize(
    "expression",
    [
        x + 4,
        x**2 - 4 * x - 34,
        (x + 4) * (x**2 - 4 * x - 34),
        x**5 - 3 * x + 1,
    ],
)
def test_certified_signs_match_high_precision_oracle(expression):
    intervals = sturm_isolate(CUBIC_163)
    with mpmath.workdps(50):
        for interval, root in zip(intervals, numeric_roots(CUBIC_163)):
            assert to_mpf(interval.lo) < root < to_mpf(interval.hi)
            expected = 1 if expression.evaluate(root) > 0 else -1
            assert certified_sign_at_root(expression, CUBIC_163, interval) == expected


def test_unit_signs_at_cubic_roots():
    intervals = sturm_isolate(CUBIC_163)
    assert [certified_sign_at_root(x + 4, CUBIC_163, iv) for iv in intervals] == [-1, -1, 1]


def test_approximate_roots():
    pf = build_period_field(cosets(5, 2))
    values = [float(v) for v in pf.approximate_roots(15)]
    assert values[0] == pytest.approx(-1.6180339887498949)
    assert values[1] == pytest.approx(0.6180339887498949)


def test_rational_interval_validation():
    with pytest.raises(ValueError):
        RationalInterval(2, 1)
    point = RationalInterval(Fraction(1, 2), Fraction(1, 2))
    assert point.is_point and point.width == 0


@pytest.mark.parametrize("p, n, d", [(5, 2, 2), (3, 3, 3), (7, 2, 3), (2, 4, 2)])
def test_degenerate_prime_power_period(p, n, d):
    c = cosets(p, d, n)
    # every coset sum vanishes, so the characteristic polynomial is x^d
    assert period_min_poly(c) == x**d
    with pytest.raises(PeriodNotPrimitive):
        build_period_field(c)


def test_prime_power_period_with_full_conductor():
    pf = build_period_field(cosets(5, 5, 2))
    assert pf.degree == 5
    assert len(pf.roots) == 5
