import cmath
import math
import random

import pytest

from core.cycring import CycIntElement
from core.resgroup import make_modulus


def numeric(element: CycIntElement) -> complex:
    zeta = cmath.exp(2j * math.pi / element.modulus.N)
    return sum(c * zeta**k for k, c in enumerate(element.coords))


def random_element(rng, mod, bound):
    return CycIntElement(mod, tuple(rng.randint(-bound, bound) for _ in range(mod.phi)))


@pytest.mark.parametrize("p, n", [(5, 1), (7, 1), (3, 2), (2, 4), (11, 1), (5, 2)])
def test_zeta_power_relations(p, n):
    mod = make_modulus(p, n)
    one = CycIntElement.integer(mod, 1)
    assert CycIntElement.zeta_power(mod, mod.N) == one
    assert CycIntElement.zeta_power(mod, 0) == one
    assert CycIntElement.zeta_power(mod, 3) * CycIntElement.zeta_power(mod, -3) == one
    # the p-th roots of unity sum to zero
    block_sum = CycIntElement.zero(mod)
    for i in range(p):
        block_sum = block_sum + CycIntElement.zeta_power(mod, i * mod.block)
    assert block_sum == CycIntElement.zero(mod)


@pytest.mark.parametrize("p, n", [(7, 1), (3, 3), (2, 5), (13, 1)])
def test_multiplication_matches_complex_evaluation(p, n):
    rng = random.Random(p * 100 + n)
    mod = make_modulus(p, n)
    for bound in (1, 50, 10**12):
        a = random_element(rng, mod, bound)
        b = random_element(rng, mod, bound)
        expected = numeric(a) * numeric(b)
        got = numeric(a * b)
        scale = max(1.0, abs(expected))
        assert abs(got - expected) / scale < 1e-9


def test_multiplication_is_commutative_and_distributive():
    rng = random.Random(3)
    mod = make_modulus(11)
    a, b, c = (random_element(rng, mod, 9) for _ in range(3))
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a * 0 == CycIntElement.zero(mod)
    assert (a - a) == CycIntElement.zero(mod)


def test_rationality():
    mod = make_modulus(5)
    assert CycIntElement.integer(mod, -4).is_rational()
    assert CycIntElement.integer(mod, -4).rational_value() == -4
    assert not CycIntElement.zeta_power(mod, 1).is_rational()
    # zeta + zeta^2 + zeta^3 + zeta^4 = -1
    total = sum((CycIntElement.zeta_power(mod, k) for k in range(1, 5)), CycIntElement.zero(mod))
    assert total.is_rational() and total.rational_value() == -1


def test_length_is_checked():
    with pytest.raises(ValueError):
        CycIntElement(make_modulus(7), (1, 2, 3))
