"""Integer polynomials over sympy's ``Poly`` (domain ZZ), plus Sturm root counting."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from sympy import ZZ, Poly, Symbol

Number = Union[int, Fraction]

X = Symbol("x")


def _trim(coefficients: Sequence[int]) -> Tuple[int, ...]:
    end = len(coefficients)
    while end and coefficients[end - 1] == 0:
        end -= 1
    return tuple(int(c) for c in coefficients[:end])


@dataclass(frozen=True, slots=True)
class IntPolynomial:
    """Coefficients constant term first; the zero polynomial is ()."""

    coefficients: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    @classmethod
    def constant(cls, value: int) -> "IntPolynomial":
        return cls((value,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def from_poly(cls, poly: Poly) -> "IntPolynomial":
        """Integer polynomial from a sympy Poly; rational coefficients are cleared by a positive factor."""
        if not poly.get_domain().is_ZZ:
            _, poly = poly.clear_denoms(convert=True)
        return cls(tuple(int(c) for c in reversed(poly.all_coeffs())))

    @classmethod
    def from_csv(cls, text: str) -> "IntPolynomial":
        parts = [part.strip() for part in text.split(",") if part.strip()]
        try:
            return cls(tuple(int(part) for part in parts))
        except ValueError as exc:
            raise ValueError(f"not a coefficient list: {text!r}") from exc

    def as_poly(self) -> Poly:
        return Poly.from_list(list(reversed(self.coefficients)) or [0], X, domain=ZZ)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_constant(self) -> bool:
        return len(self.coefficients) <= 1

    def __add__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        return IntPolynomial.from_poly(self.as_poly() + _coerce(other).as_poly())

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial.from_poly(-self.as_poly())

    def __sub__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        return IntPolynomial.from_poly(self.as_poly() - _coerce(other).as_poly())

    def __rsub__(self, other: int) -> "IntPolynomial":
        return _coerce(other) - self

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        return IntPolynomial.from_poly(self.as_poly() * _coerce(other).as_poly())

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError("negative exponent")
        return IntPolynomial.from_poly(self.as_poly() ** exponent)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial.from_poly(self.as_poly().diff(X))

    def content(self) -> int:
        return abs(int(self.as_poly().content())) if self.coefficients else 0

    def primitive_part(self) -> "IntPolynomial":
        """Divide by the (positive) content; signs are preserved."""
        c = self.content()
        if c in (0, 1):
            return self
        return IntPolynomial.from_poly(self.as_poly().exquo_ground(c))

    def evaluate(self, x):
        result = 0
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def sign_at(self, x: Number) -> int:
        """Exact sign at a rational point (homogenised integer Horner)."""
        if self.is_zero():
            return 0
        q = Fraction(x)
        num, den = q.numerator, q.denominator
        total = 0
        power = 1
        for c in reversed(self.coefficients):
            total = total * num + c * power
            power *= den
        # total = den^deg * P(num/den); den > 0 keeps the sign
        return (total > 0) - (total < 0)

    def sign_at_infinity(self, positive: bool = True) -> int:
        if self.is_zero():
            return 0
        s = 1 if self.leading > 0 else -1
        if not positive and self.degree % 2 == 1:
            s = -s
        return s

    def pseudo_remainder(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """|lc(divisor)|^k * self mod divisor, a positive multiple of the true remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("pseudo-remainder by zero polynomial")
        r = self.as_poly().prem(divisor.as_poly())
        # prem scales by lc^(deg - deg' + 1), which is negative for an odd power of a negative lc
        k = self.degree - divisor.degree + 1
        if k > 0 and k % 2 == 1 and divisor.leading < 0:
            r = -r
        return IntPolynomial.from_poly(r)

    def to_csv(self) -> str:
        return ",".join(str(c) for c in self.coefficients) if self.coefficients else "0"

    def to_expression(self, var: str = "x") -> str:
        """Human-readable form that the unit-expression parser accepts (var = 'a')."""
        if self.is_zero():
            return "0"
        terms: List[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                monomial = var if power == 1 else f"{var}^{power}"
                body = monomial if magnitude == 1 else f"{magnitude}*{monomial}"
            if not terms:
                terms.append(f"-{body}" if c < 0 else body)
            else:
                terms.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(terms)

    def __str__(self) -> str:
        return self.to_expression("x")


def _coerce(value: Union[IntPolynomial, int]) -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value
    return IntPolynomial.constant(value)


def _normalised(p: IntPolynomial) -> IntPolynomial:
    p = p.primitive_part()
    return -p if p.leading < 0 else p


def polynomial_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient."""
    return _normalised(IntPolynomial.from_poly(f.as_poly().gcd(g.as_poly())))


def is_squarefree(p: IntPolynomial) -> bool:
    if p.degree <= 1:
        return not p.is_zero()
    return p.as_poly().is_sqf


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """Product of the distinct irreducible factors: primitive, positive leading coefficient."""
    if p.is_zero():
        return p
    return _normalised(IntPolynomial.from_poly(p.as_poly().sqf_part()))


def sturm_chain(p: IntPolynomial) -> List[IntPolynomial]:
    """Sturm sequence of p's squarefree part as primitive integer polynomials.

    The whole chain may carry one common sign relative to p; variation
    counts are unaffected.
    """
    if p.degree < 1:
        return [p]
    return [IntPolynomial.from_poly(s).primitive_part() for s in p.as_poly().sturm()]


def sign_variations(chain: Sequence[IntPolynomial], x: Number) -> int:
    signs = [s for s in (poly.sign_at(x) for poly in chain) if s != 0]
    return sum(1 for left, right in zip(signs, signs[1:]) if left != right)


def variations_at_infinity(chain: Sequence[IntPolynomial], positive: bool) -> int:
    signs = [s for s in (poly.sign_at_infinity(positive) for poly in chain) if s != 0]
    return sum(1 for left, right in zip(signs, signs[1:]) if left != right)


def count_roots(chain: Sequence[IntPolynomial], lo: Number, hi: Number) -> int:
    """Distinct real roots in the half-open interval (lo, hi]."""
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def count_real_roots(chain: Sequence[IntPolynomial]) -> int:
    return variations_at_infinity(chain, False) - variations_at_infinity(chain, True)


def root_bound(p: IntPolynomial) -> Fraction:
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    lead = abs(p.leading)
    return 1 + Fraction(max(abs(c) for c in p.coefficients[:-1]) if p.degree > 0 else 0, lead)
