"""Unit expressions: integer polynomials in the period generator ``a``.

Grammar (whitespace ignored, no implicit multiplication)::

    expr  := term (('+' | '-') term)*
    term  := unary ('*' unary)*
    unary := ('+' | '-') unary | power
    power := atom ('^' INT)?
    atom  := INT | 'a' | '(' expr ')'
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .constants import UNIT_VARIABLE
from .errors import ExpressionSyntaxError, ZeroExpression
from .gf2mat import BitVector
from .polynomial import IntPolynomial
from .realalg import PeriodField, certified_sign_at_root
from .resgroup import Modulus, embedding_set

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[A-Za-z_]\w*)|(?P<op>[-+*^()]))")


@dataclass(frozen=True, slots=True)
class UnitExpr:
    source: str
    poly: IntPolynomial


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ExpressionSyntaxError(f"unexpected character {text[offset]!r}", offset, text)
        kind = match.lastgroup or "op"
        start = match.start(kind)
        value = match.group(kind)
        if kind == "var" and value != UNIT_VARIABLE:
            raise ExpressionSyntaxError(f"unknown variable {value!r}", start, text)
        tokens.append(_Token(kind, value, start))
        pos = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def _advance(self) -> _Token:
        token = self.current
        self.index += 1
        return token

    def _accept(self, op: str) -> bool:
        if self.current.kind == "op" and self.current.text == op:
            self.index += 1
            return True
        return False

    def _fail(self, message: str, token: Optional[_Token] = None) -> ExpressionSyntaxError:
        token = token or self.current
        return ExpressionSyntaxError(message, token.position, self.text)

    def parse(self) -> IntPolynomial:
        if self.current.kind == "end":
            raise self._fail("empty expression")
        poly = self._expr()
        if self.current.kind != "end":
            raise self._fail(f"unexpected {self.current.text!r}")
        return poly

    def _expr(self) -> IntPolynomial:
        poly = self._term()
        while True:
            if self._accept("+"):
                poly = poly + self._term()
            elif self._accept("-"):
                poly = poly - self._term()
            else:
                return poly

    def _term(self) -> IntPolynomial:
        poly = self._unary()
        while self._accept("*"):
            poly = poly * self._unary()
        return poly

    def _unary(self) -> IntPolynomial:
        if self._accept("-"):
            return -self._unary()
        if self._accept("+"):
            return self._unary()
        return self._power()

    def _power(self) -> IntPolynomial:
        base = self._atom()
        if self._accept("^"):
            token = self.current
            if token.kind != "int":
                raise self._fail("exponent must be a non-negative integer literal")
            self._advance()
            if self.current.kind == "op" and self.current.text == "^":
                raise self._fail("chained powers need parentheses")
            return base ** int(token.text)
        return base

    def _atom(self) -> IntPolynomial:
        token = self.current
        if token.kind == "int":
            self._advance()
            return IntPolynomial.constant(int(token.text))
        if token.kind == "var":
            self._advance()
            return IntPolynomial.x()
        if self._accept("("):
            inner = self._expr()
            if not self._accept(")"):
                raise self._fail("missing ')'")
            return inner
        if token.kind == "end":
            raise self._fail("unexpected end of expression")
        raise self._fail(f"unexpected {token.text!r}")


def parse_unit_expr(text: str) -> UnitExpr:
    poly = _Parser(text).parse()
    if poly.is_zero():
        raise ZeroExpression(text)
    return UnitExpr(source=text, poly=poly)


def format_unit_expr(poly: IntPolynomial) -> str:
    """Printed form that parses back to ``poly``."""
    return poly.to_expression(UNIT_VARIABLE)


def root_signs(e: UnitExpr, pf: PeriodField) -> Tuple[int, ...]:
    """Certified sign of e at each root of the period polynomial (root order)."""
    return tuple(certified_sign_at_root(e.poly, pf.min_poly, interval) for interval in pf.roots)


def expr_signature(e: UnitExpr, pf: PeriodField, mod: Modulus) -> BitVector:
    signs = root_signs(e, pf)
    bits = []
    for b in embedding_set(mod):
        root = pf.matching[pf.cosets.coset_of(b)]
        bits.append(1 if signs[root] < 0 else 0)
    logger.debug(f"Signature of {e.source!r} over {pf.degree} roots: signs={signs}")
    return BitVector.from_bits(bits)
