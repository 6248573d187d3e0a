"""Exact signatures of the circular units of Q(zeta_N)^+.

C is generated by -1 and xi_a = zeta^((1-a)/2) (1 - zeta^a) / (1 - zeta) for
1 < a < N/2, gcd(a, N) = 1, with zeta^(1/2) = exp(pi*i/N). The embedding
sigma_b extends to that square root through the odd representative b' of b
in {b, b + N}, and there

    sigma_b(xi_a) = sin(pi*a*b'/N) / sin(pi*b'/N),

so every sign is decided by integer arithmetic alone and xi_a > 0 at sigma_1.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass
from typing import List

from .errors import RankOutOfRange, ZeroArgument
from .gf2mat import BitMatrix, BitVector, rank
from .resgroup import Modulus, embedding_set

logger = logging.getLogger(__name__)

MINUS_ONE = -1


@dataclass(frozen=True, slots=True)
class CircularGenerator:
    modulus: Modulus
    a: int

    @property
    def label(self) -> str:
        return "-1" if self.a == MINUS_ONE else f"xi_{self.a}"


@dataclass(frozen=True, slots=True)
class IndexExponents:
    """[C:C+] = 2^c_to_cplus and [C+:C^2] = 2^cplus_to_csq."""

    c_to_cplus: int
    cplus_to_csq: int


@dataclass(frozen=True, slots=True)
class SignatureSummary:
    modulus: Modulus
    rank: int
    indices: IndexExponents

    @property
    def deficiency(self) -> int:
        return self.modulus.half_degree - self.rank

    @property
    def full_rank(self) -> bool:
        return self.deficiency == 0


def sin_sign(m: int, mod: Modulus) -> int:
    """Sign of sin(pi*m/N)."""
    r = m % (2 * mod.N)
    if r % mod.N == 0:
        raise ZeroArgument(m, mod.N)
    return 1 if r < mod.N else -1


def circular_generators(mod: Modulus) -> List[CircularGenerator]:
    """-1 first, then xi_a for a ascending over the labels other than 1."""
    gens = [CircularGenerator(mod, MINUS_ONE)]
    gens.extend(CircularGenerator(mod, a) for a in embedding_set(mod) if a != 1)
    return gens


def odd_representative(b: int, mod: Modulus) -> int:
    """b or b + N, whichever is odd (b itself when N is even)."""
    return b if b % 2 == 1 or mod.N % 2 == 0 else b + mod.N


def _signature_bits(a: int, mod: Modulus, labels: List[int]) -> List[int]:
    if a == MINUS_ONE:
        return [1] * len(labels)
    bits = []
    for b in labels:
        odd_b = odd_representative(b, mod)
        bits.append(int(sin_sign(a * odd_b, mod) * sin_sign(odd_b, mod) < 0))
    return bits


def generator_signature(g: CircularGenerator) -> BitVector:
    return BitVector.from_bits(_signature_bits(g.a, g.modulus, embedding_set(g.modulus)))


def signature_matrix(mod: Modulus) -> BitMatrix:
    labels = embedding_set(mod)
    gens = circular_generators(mod)
    rows = [_signature_bits(g.a, mod, labels) for g in gens]
    logger.debug(f"Built {len(rows)}x{len(labels)} circular signature matrix for N={mod.N}")
    return BitMatrix.from_rows(rows, labels=[g.label for g in gens], ncols=len(labels))


def indices_from_rank(mod: Modulus, r: int) -> IndexExponents:
    if not 1 <= r <= mod.half_degree:
        raise RankOutOfRange(r, mod.half_degree)
    return IndexExponents(c_to_cplus=r, cplus_to_csq=mod.half_degree - r)


def signature_rank(mod: Modulus) -> SignatureSummary:
    r = rank(signature_matrix(mod))
    return SignatureSummary(modulus=mod, rank=r, indices=indices_from_rank(mod, r))


def float_unit_value(a: int, b: int, mod: Modulus) -> float:
    """Double-precision sigma_b(xi_a) computed from roots of unity.

    Independent of the sine rule: w^(1-a) (1 - w^(2a)) / (1 - w^2) with
    w = exp(pi*i*b'/N) the image of zeta^(1/2).
    """
    if a == MINUS_ONE:
        return -1.0
    w = cmath.exp(1j * math.pi * odd_representative(b, mod) / mod.N)
    value = w ** (1 - a) * (1 - w ** (2 * a)) / (1 - w**2)
    return value.real


def oracle_mismatches(mod: Modulus) -> List[tuple[int, int]]:
    """(a, b) pairs where the exact rule and the float evaluation disagree."""
    labels = embedding_set(mod)
    mismatches = []
    for g in circular_generators(mod):
        exact = _signature_bits(g.a, mod, labels)
        for b, bit in zip(labels, exact):
            if int(float_unit_value(g.a, b, mod) < 0) != bit:
                mismatches.append((g.a, b))
    return mismatches
