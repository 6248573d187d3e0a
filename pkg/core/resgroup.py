"""Prime-power moduli and the group (Z/N)^x / {+-1}.

The residues b with 1 <= b < N/2 and gcd(b, N) = 1 label the real embeddings of
Q(zeta_N)^+; the quotient group acts on them and its subgroups cut out the
Gaussian-period subfields.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Tuple

from sympy import isprime

from .errors import BadDegree, BadExponent, CompositeP

logger = logging.getLogger(__name__)


def modulus_label(p: int, n: int = 1) -> str:
    """Label "p" or "p^n"; also names inputs that make_modulus rejects."""
    return str(p) if n == 1 else f"{p}^{n}"


@dataclass(frozen=True, slots=True)
class Modulus:
    """A prime power N = p^n together with phi(N)/2."""

    p: int
    n: int
    N: int
    half_degree: int

    @property
    def phi(self) -> int:
        return 2 * self.half_degree

    @property
    def block(self) -> int:
        """p^(n-1), the stride of the cyclotomic polynomial Phi_N."""
        return self.N // self.p

    @property
    def label(self) -> str:
        return modulus_label(self.p, self.n)

    def reduce(self, x: int) -> int:
        """Canonical embedding label of the class of x modulo +-1."""
        r = x % self.N
        return min(r, self.N - r)


def make_modulus(p: int, n: int = 1) -> Modulus:
    if not isprime(p):
        raise CompositeP(p)
    if n < 1 or (p == 2 and n < 2):
        raise BadExponent(p, n)
    N = p**n
    half_degree = p ** (n - 1) * (p - 1) // 2
    return Modulus(p=p, n=n, N=N, half_degree=half_degree)


def embedding_set(m: Modulus) -> List[int]:
    """Ascending list of the embedding labels b (canonical column order)."""
    return [b for b in range(1, (m.N + 1) // 2) if gcd(b, m.N) == 1]


@dataclass(frozen=True, slots=True)
class QuotientGroup:
    """The cyclic group (Z/N)^x / {+-1} with a fixed generator.

    ``powers[k]`` is the reduced label of generator^k and ``logs`` inverts it.
    """

    modulus: Modulus
    generator: int
    element_order: int
    powers: Tuple[int, ...]
    logs: Dict[int, int]

    def discrete_log(self, b: int) -> int:
        return self.logs[self.modulus.reduce(b)]


def _reduced_powers(m: Modulus, g: int, order: int) -> List[int]:
    seen: List[int] = []
    x = 1
    for _ in range(order):
        seen.append(m.reduce(x))
        x = x * g % m.N
    return seen


def group_generator(m: Modulus) -> QuotientGroup:
    """Smallest representative whose reduced powers enumerate every label once."""
    labels = embedding_set(m)
    order = m.half_degree
    candidates = [3] if m.p == 2 else range(1, m.N)
    for g in candidates:
        if gcd(g, m.N) != 1:
            continue
        powers = _reduced_powers(m, g, order)
        if sorted(powers) == labels:
            logger.debug(f"Generator of the quotient group mod {m.N}: {g}")
            logs = {b: k for k, b in enumerate(powers)}
            return QuotientGroup(modulus=m, generator=g, element_order=order, powers=tuple(powers), logs=logs)
    # (Z/p^n)^x / {+-1} is cyclic for every modulus accepted by make_modulus.
    raise RuntimeError(f"no generator found modulo {m.N}")


@dataclass(frozen=True, slots=True)
class CosetDecomposition:
    """Cosets of the index-d subgroup H = <g^d>, coset j = g^j * H."""

    group: QuotientGroup
    degree: int
    subgroup: Tuple[int, ...]
    cosets: Tuple[Tuple[int, ...], ...]

    def coset_of(self, b: int) -> int:
        return self.group.discrete_log(b) % self.degree


def coset_decomposition(g: QuotientGroup, d: int) -> CosetDecomposition:
    order = g.element_order
    if d < 1 or order % d != 0:
        raise BadDegree(d, order)
    cosets = tuple(tuple(g.powers[j + k] for k in range(0, order, d)) for j in range(d))
    return CosetDecomposition(group=g, degree=d, subgroup=cosets[0], cosets=cosets)


def galois_permutation(m: Modulus, c: int) -> List[int]:
    """Column permutation induced by sigma_c: position of reduce(c*b) for each b."""
    if gcd(c, m.N) != 1:
        raise ValueError(f"{c} is not a unit modulo {m.N}")
    labels = embedding_set(m)
    position = {b: i for i, b in enumerate(labels)}
    return [position[m.reduce(c * b)] for b in labels]
