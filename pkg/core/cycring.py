"""Exact arithmetic in Z[zeta_N] = Z[x]/(Phi_N) for prime-power N.

Elements are power-basis coordinate tuples of length phi(N). Products go
through Kronecker substitution (pack into one big integer, multiply, unpack)
and are folded modulo x^N - 1 before the reduction modulo Phi_N.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from .resgroup import Modulus


def _pack(values: Sequence[int], width: int) -> int:
    packed = 0
    for c in reversed(values):
        packed = (packed << width) + c
    return packed


def _unpack(packed: int, width: int, count: int) -> List[int]:
    mask = (1 << width) - 1
    half = 1 << (width - 1)
    out = []
    for _ in range(count):
        low = packed & mask
        if low >= half:
            low -= 1 << width
        out.append(low)
        packed = (packed - low) >> width
    return out


def _reduce_cyclotomic(values: List[int], mod: Modulus) -> Tuple[int, ...]:
    """Fold a length-N vector (mod x^N - 1) down to the phi(N) power basis.

    Phi_N(x) = sum_{i<p} x^(i*block), so x^k for k >= phi rewrites as
    -sum_{i<p-1} x^(k - phi + i*block).
    """
    phi = mod.phi
    block = mod.block
    for k in range(mod.N - 1, phi - 1, -1):
        c = values[k]
        if c:
            base = k - phi
            for i in range(mod.p - 1):
                values[base + i * block] -= c
            values[k] = 0
    return tuple(values[:phi])


@dataclass(frozen=True, slots=True)
class CycIntElement:
    modulus: Modulus
    coords: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.modulus.phi:
            raise ValueError(f"expected {self.modulus.phi} coordinates, got {len(self.coords)}")

    @classmethod
    def zero(cls, mod: Modulus) -> "CycIntElement":
        return cls(mod, (0,) * mod.phi)

    @classmethod
    def integer(cls, mod: Modulus, value: int) -> "CycIntElement":
        return cls(mod, (value,) + (0,) * (mod.phi - 1))

    @classmethod
    def zeta_power(cls, mod: Modulus, k: int) -> "CycIntElement":
        """zeta^k for any integer k."""
        values = [0] * mod.N
        values[k % mod.N] = 1
        return cls(mod, _reduce_cyclotomic(values, mod))

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational_value(self) -> int:
        return self.coords[0]

    def _check(self, other: "CycIntElement") -> None:
        if other.modulus != self.modulus:
            raise ValueError("elements live in different cyclotomic rings")

    def __add__(self, other: Union["CycIntElement", int]) -> "CycIntElement":
        if isinstance(other, int):
            other = CycIntElement.integer(self.modulus, other)
        self._check(other)
        return CycIntElement(self.modulus, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self) -> "CycIntElement":
        return CycIntElement(self.modulus, tuple(-a for a in self.coords))

    def __sub__(self, other: Union["CycIntElement", int]) -> "CycIntElement":
        return self + (-other)

    def __mul__(self, other: Union["CycIntElement", int]) -> "CycIntElement":
        if isinstance(other, int):
            return CycIntElement(self.modulus, tuple(a * other for a in self.coords))
        self._check(other)
        mod = self.modulus
        bound_a = max((abs(c) for c in self.coords), default=0)
        bound_b = max((abs(c) for c in other.coords), default=0)
        if bound_a == 0 or bound_b == 0:
            return CycIntElement.zero(mod)
        width = (bound_a * bound_b * mod.phi).bit_length() + 2
        product = _pack(self.coords, width) * _pack(other.coords, width)
        raw = _unpack(product, width, 2 * mod.phi - 1)
        folded = [0] * mod.N
        for k, c in enumerate(raw):
            folded[k % mod.N] += c
        return CycIntElement(mod, _reduce_cyclotomic(folded, mod))

    __rmul__ = __mul__
