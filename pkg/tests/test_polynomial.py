from fractions import Fraction

import pytest
from sympy import ZZ, Poly, Rational

from core.polynomial import (
    IntPolynomial,
    count_real_roots,
    count_roots,
    is_squarefree,
    polynomial_gcd,
    X,
    root_bound,
    squarefree_part,
    sturm_chain,
)

x = IntPolynomial.x()


def test_canonical_form_drops_trailing_zeros():
    assert IntPolynomial((1, 2, 0, 0)).coefficients == (1, 2)
    assert IntPolynomial((0, 0)).is_zero()
    assert IntPolynomial().degree == -1
    assert IntPolynomial((0, 0)) == IntPolynomial()


def test_arithmetic():
    p = x**2 - 2
    assert p.coefficients == (-2, 0, 1)
    assert ((x + 1) * (x - 1)).coefficients == (-1, 0, 1)
    assert (3 - x).coefficients == (3, -1)
    assert (x**3 + x**2 - 54 * x - 169).derivative().coefficients == (-54, 2, 3)
    assert (x**0).coefficients == (1,)


def test_content_and_primitive_part():
    p = IntPolynomial((-6, 4, 2))
    assert p.content() == 2
    assert p.primitive_part().coefficients == (-3, 2, 1)
    assert IntPolynomial((-4, -2)).primitive_part().coefficients == (-2, -1)


def test_sign_at_rational_points():
    p = x**2 - 2
    assert p.sign_at(Fraction(3, 2)) == 1
    assert p.sign_at(Fraction(7, 5)) == -1
    assert p.sign_at(Fraction(-3, 2)) == 1
    assert (x - 1).sign_at(1) == 0
    assert IntPolynomial().sign_at(5) == 0
    assert (3 * x - 1).sign_at(Fraction(1, 3)) == 0


def test_sign_at_infinity():
    p = -(x**3) + x
    assert p.sign_at_infinity(True) == -1
    assert p.sign_at_infinity(False) == 1
    assert (x**2).sign_at_infinity(False) == 1


def test_pseudo_remainder_is_positive_multiple():
    a = x**3 + 2 * x + 5
    b = IntPolynomial((1, -3))  # -3x + 1
    r = a.pseudo_remainder(b)
    # a(1/3) = 1/27 + 2/3 + 5 > 0, and the scale |lc|^k is positive
    assert r.degree == 0
    assert r.leading > 0
    assert Fraction(r.leading, 27) == a.evaluate(Fraction(1, 3))


def test_pseudo_remainder_sign_with_even_power_and_low_degree():
    # (-2)^2 is already positive
    r = (x**2 + 1).pseudo_remainder(IntPolynomial((1, -2)))
    assert r.coefficients == (5,)
    assert (x + 3).pseudo_remainder(x**2 - 2) == x + 3
    with pytest.raises(ZeroDivisionError):
        x.pseudo_remainder(IntPolynomial())


def test_sympy_poly_round_trip():
    p = x**3 + x**2 - 54 * x - 169
    assert p.as_poly() == Poly(X**3 + X**2 - 54 * X - 169, X, domain=ZZ)
    assert IntPolynomial.from_poly(p.as_poly()) == p
    assert IntPolynomial.from_poly(Poly(X**2 / 2 - Rational(1, 3), X)) == IntPolynomial((-2, 0, 3))
    assert IntPolynomial().as_poly().is_zero


def test_gcd_and_squarefree():
    f = (x - 1) ** 2 * (x + 2)
    g = (x - 1) * (x + 3)
    assert polynomial_gcd(f, g) == x - 1
    assert polynomial_gcd(2 * (x + 1), 4 * (x + 1) * (x - 5)) == x + 1
    assert not is_squarefree(f)
    assert is_squarefree(x**3 + x**2 - 54 * x - 169)
    assert squarefree_part(f) == (x - 1) * (x + 2)
    assert squarefree_part(3 * (x**2 - 2)) == x**2 - 2
    assert squarefree_part(-((x - 1) ** 3)) == x - 1


def test_sturm_counts():
    p = x**3 + x**2 - 54 * x - 169
    chain = sturm_chain(p)
    assert count_real_roots(chain) == 3
    assert count_roots(chain, -10, 10) == 3
    assert count_roots(chain, 0, 10) == 1
    assert count_real_roots(sturm_chain(x**2 + 1)) == 0
    # (lo, hi] is half-open: the root 1 of x - 1 counts only on the right
    line = sturm_chain(x - 1)
    assert count_roots(line, 0, 1) == 1
    assert count_roots(line, 1, 2) == 0


def test_sturm_chain_is_integral_and_counts_distinct_roots():
    p = (x - 1) ** 2 * (x + 2)
    chain = sturm_chain(p)
    assert all(c.content() == 1 for c in chain)
    assert count_real_roots(chain) == 2
    assert count_roots(sturm_chain(-(x**2) + 4), -3, 3) == 2


def test_root_bound_encloses_roots():
    p = x**3 + x**2 - 54 * x - 169
    bound = root_bound(p)
    assert bound == 170
    assert count_roots(sturm_chain(p), -bound, bound) == 3


def test_text_forms():
    p = IntPolynomial((-34, -4, 1))
    assert p.to_csv() == "-34,-4,1"
    assert IntPolynomial.from_csv("-34, -4, 1") == p
    assert p.to_expression("a") == "a^2 - 4*a - 34"
    assert str(IntPolynomial((-169, -54, 1, 1))) == "x^3 + x^2 - 54*x - 169"
    assert IntPolynomial().to_csv() == "0"
    assert (-x).to_expression("a") == "-a"
    with pytest.raises(ValueError):
        IntPolynomial.from_csv("1,b")

