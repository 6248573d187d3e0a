"""Gaussian periods, their minimal polynomials and certified real-root work.

Minimal polynomials are expanded exactly in Z[zeta_N]. Real roots are isolated
with Sturm chains on rational intervals; numeric values enter only through
outward-rounded mpmath interval enclosures, used to tell which conjugate is
which root.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import mpmath
from mpmath import iv

from .constants import DEFAULT_INITIAL_PRECISION_BITS, DEFAULT_MAX_PRECISION_BITS
from .cycring import CycIntElement
from .errors import (
    NonRationalCoefficient,
    NotSquarefree,
    PeriodNotPrimitive,
    PrecisionExhausted,
    RootMatchingError,
    VanishesAtRoot,
)
from .polynomial import (
    IntPolynomial,
    count_roots,
    is_squarefree,
    polynomial_gcd,
    root_bound,
    squarefree_part,
    sturm_chain,
)
from .resgroup import CosetDecomposition

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True, slots=True)
class PeriodField:
    """Degree-d subfield of Q(zeta_N)^+ generated by the period eta_0."""

    cosets: CosetDecomposition
    min_poly: IntPolynomial
    roots: Tuple[RationalInterval, ...]
    matching: Dict[int, int] = field(default_factory=dict)

    @property
    def degree(self) -> int:
        return self.cosets.degree

    def root_of_coset(self, j: int) -> RationalInterval:
        return self.roots[self.matching[j]]

    def approximate_roots(self, digits: int = 20) -> List[str]:
        """Decimal approximations of the roots, ascending, each correct to ``digits`` places."""
        target = Fraction(1, 10 ** (digits + 1))
        chain = sturm_chain(self.min_poly)
        values = []
        with mpmath.workdps(digits + 10):
            for interval in self.roots:
                refined = _narrow(self.min_poly, chain, interval, target)
                mid = refined.midpoint
                value = mpmath.mpf(mid.numerator) / mid.denominator
                values.append(mpmath.nstr(value, digits))
        return values


def period_element(c: CosetDecomposition, j: int) -> CycIntElement:
    """eta_j = sum over h in coset j of zeta^h + zeta^-h."""
    if not 0 <= j < c.degree:
        raise IndexError(f"coset index {j} outside 0..{c.degree - 1}")
    mod = c.group.modulus
    total = CycIntElement.zero(mod)
    for h in c.cosets[j]:
        total = total + CycIntElement.zeta_power(mod, h) + CycIntElement.zeta_power(mod, -h)
    return total


def period_min_poly(c: CosetDecomposition) -> IntPolynomial:
    mod = c.group.modulus
    one = CycIntElement.integer(mod, 1)
    # coefficients of prod (x - eta_j), constant term first
    product: List[CycIntElement] = [one]
    for j in range(c.degree):
        eta = period_element(c, j)
        shifted = [CycIntElement.zero(mod)] + product
        for k, coeff in enumerate(product):
            shifted[k] = shifted[k] - eta * coeff
        product = shifted
    coefficients = []
    for index, coeff in enumerate(product):
        if not coeff.is_rational():
            raise NonRationalCoefficient(index)
        coefficients.append(coeff.rational_value())
    poly = IntPolynomial(tuple(coefficients))
    logger.debug(f"Minimal polynomial of the degree-{c.degree} period mod {mod.N}: {poly}")
    return poly


def _bisect_once(
    p: IntPolynomial, chain: Sequence[IntPolynomial], interval: RationalInterval
) -> RationalInterval:
    """Halve an isolating interval, keeping the half that holds the root."""
    mid = interval.midpoint
    if p.sign_at(mid) == 0:
        return RationalInterval(mid, mid)
    if count_roots(chain, interval.lo, mid) == 1:
        return RationalInterval(interval.lo, mid)
    return RationalInterval(mid, interval.hi)


def _narrow(
    p: IntPolynomial, chain: Sequence[IntPolynomial], interval: RationalInterval, width: Fraction
) -> RationalInterval:
    while interval.width > width:
        interval = _bisect_once(p, chain, interval)
    return interval


def _separate_point(
    p: IntPolynomial, chain: Sequence[IntPolynomial], root: Fraction, lo: Fraction, hi: Fraction
) -> Tuple[Fraction, Fraction]:
    """Non-root rationals around ``root`` with no other root between them."""
    eps = min(root - lo, hi - root) / 2
    while True:
        left, right = root - eps, root + eps
        if p.sign_at(left) != 0 and p.sign_at(right) != 0 and count_roots(chain, left, right) == 1:
            return left, right
        eps /= 2


def sturm_isolate(p: IntPolynomial) -> List[RationalInterval]:
    """Disjoint ascending rational intervals, one per distinct real root of p."""
    if p.degree < 1:
        return []
    if not is_squarefree(p):
        raise NotSquarefree(p.to_csv())
    chain = sturm_chain(p)
    bound = root_bound(p)
    found: List[RationalInterval] = []
    stack = [(-bound, bound, count_roots(chain, -bound, bound))]
    steps = 0
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            found.append(RationalInterval(lo, hi))
            continue
        steps += 1
        mid = (lo + hi) / 2
        if p.sign_at(mid) == 0:
            found.append(RationalInterval(mid, mid))
            left, right = _separate_point(p, chain, mid, lo, hi)
            stack.append((lo, left, count_roots(chain, lo, left)))
            stack.append((right, hi, count_roots(chain, right, hi)))
        else:
            stack.append((lo, mid, count_roots(chain, lo, mid)))
            stack.append((mid, hi, count_roots(chain, mid, hi)))
    found.sort(key=lambda interval: interval.lo)
    # neighbours from one split share the midpoint; pull the left one inside
    for i in range(len(found) - 1):
        shared = found[i + 1].lo
        while not found[i].is_point and found[i].hi >= shared:
            found[i] = _bisect_once(p, chain, found[i])
    logger.debug(f"Isolated {len(found)} real roots of degree-{p.degree} polynomial in {steps} splits")
    return found


def _iv_fraction(x: Fraction):
    return iv.mpf(x.numerator) / x.denominator


def _period_enclosure(c: CosetDecomposition, j: int):
    N = c.group.modulus.N
    total = iv.mpf(0)
    for h in c.cosets[j]:
        total += 2 * iv.cos(2 * iv.pi * h / N)
    return total


def _certainly_outside(enclosure, interval: RationalInterval) -> bool:
    lo = _iv_fraction(interval.lo)
    hi = _iv_fraction(interval.hi)
    return (enclosure < lo) is True or (hi < enclosure) is True


def match_roots(
    c: CosetDecomposition,
    mp: IntPolynomial,
    ivs: Sequence[RationalInterval],
    *,
    initial_bits: int = DEFAULT_INITIAL_PRECISION_BITS,
    max_bits: int = DEFAULT_MAX_PRECISION_BITS,
) -> PeriodField:
    """Pair coset j with the isolating interval that holds eta_j.

    eta_j is a root of mp, so the interval holding it always meets the
    enclosure; an enclosure meeting only one interval certifies the pair.
    """
    if len(ivs) != c.degree:
        raise RootMatchingError(f"{len(ivs)} isolating intervals for {c.degree} cosets")
    saved = iv.prec
    bits = initial_bits
    try:
        while bits <= max_bits:
            iv.prec = bits
            matching: Dict[int, int] = {}
            for j in range(c.degree):
                enclosure = _period_enclosure(c, j)
                hits = [k for k, interval in enumerate(ivs) if not _certainly_outside(enclosure, interval)]
                if len(hits) != 1:
                    break
                matching[j] = hits[0]
            else:
                if sorted(matching.values()) != list(range(c.degree)):
                    raise RootMatchingError(f"cosets do not map bijectively onto roots: {matching}")
                logger.debug(f"Matched {c.degree} periods to roots at {bits} bits")
                return PeriodField(cosets=c, min_poly=mp, roots=tuple(ivs), matching=matching)
            logger.debug(f"Root matching undecided at {bits} bits, doubling precision")
            bits *= 2
    finally:
        iv.prec = saved
    raise PrecisionExhausted(max_bits)


def build_period_field(
    c: CosetDecomposition,
    *,
    initial_bits: int = DEFAULT_INITIAL_PRECISION_BITS,
    max_bits: int = DEFAULT_MAX_PRECISION_BITS,
) -> PeriodField:
    mod = c.group.modulus
    # the index-d subgroup contains the kernel of reduction mod N/p, so every coset sum vanishes
    if c.degree > 1 and mod.n >= 2 and (mod.half_degree // c.degree) % mod.p == 0:
        raise PeriodNotPrimitive(c.degree, mod.N)
    mp = period_min_poly(c)
    return match_roots(c, mp, sturm_isolate(mp), initial_bits=initial_bits, max_bits=max_bits)


def certified_sign_at_root(P: IntPolynomial, mp: IntPolynomial, interval: RationalInterval) -> int:
    """Exact sign of P at the root of mp isolated by ``interval``."""
    # |lc|^k * P = Q * mp + R, so R has the sign of P at every root of mp
    R = P.pseudo_remainder(mp) if mp.degree >= 1 else P
    if R.is_zero():
        raise VanishesAtRoot(P.to_csv())
    if R.is_constant():
        return 1 if R.leading > 0 else -1
    if polynomial_gcd(R, mp).degree > 0:
        raise VanishesAtRoot(P.to_csv())
    if interval.is_point:
        return R.sign_at(interval.lo)
    for endpoint in (interval.hi, interval.lo):
        if mp.sign_at(endpoint) == 0:
            return R.sign_at(endpoint)

    mp_chain = sturm_chain(mp)
    r_chain = sturm_chain(squarefree_part(R))
    lo, hi = interval.lo, interval.hi
    steps = 0
    while count_roots(r_chain, lo, hi) != 0:
        mid = (lo + hi) / 2
        if mp.sign_at(mid) == 0:
            return R.sign_at(mid)
        if count_roots(mp_chain, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
        steps += 1
    if steps:
        logger.debug(f"Sign of {P.to_csv()} certified after {steps} bisections")
    # no root of R in (lo, hi] and the root of mp lies in (lo, hi)
    return R.sign_at(hi)

