"""Bit-packed linear algebra over GF(2).

Rows are packed little-endian into uint64 words (column c lives in word c // 64,
bit c % 64) and elimination XORs whole word rows at once.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import LengthMismatch

logger = logging.getLogger(__name__)

WORD_BITS = 64
LABEL_HEADER = "# labels:"


def _word_count(length: int) -> int:
    return max(1, (length + WORD_BITS - 1) // WORD_BITS)


def _pack(bits: Sequence[int], length: int) -> np.ndarray:
    padded = np.zeros(_word_count(length) * WORD_BITS, dtype=np.uint8)
    padded[:length] = np.asarray(bits, dtype=np.uint8) & 1
    return np.packbits(padded, bitorder="little").view("<u8").copy()


@dataclass(frozen=True, eq=False, slots=True)
class BitVector:
    length: int
    words: np.ndarray

    def __post_init__(self) -> None:
        self.words.setflags(write=False)

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BitVector":
        return cls(length=len(bits), words=_pack(bits, len(bits)))

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        if any(ch not in "01" for ch in text):
            raise ValueError(f"bit string may only contain 0/1: {text!r}")
        return cls.from_bits([int(ch) for ch in text])

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(length=length, words=np.zeros(_word_count(length), dtype="<u8"))

    @classmethod
    def ones(cls, length: int) -> "BitVector":
        return cls.from_bits([1] * length)

    def bits(self) -> Tuple[int, ...]:
        unpacked = np.unpackbits(self.words.view(np.uint8), bitorder="little")
        return tuple(int(bit) for bit in unpacked[: self.length])

    def is_zero(self) -> bool:
        return not self.words.any()

    def weight(self) -> int:
        return sum(self.bits())

    def __getitem__(self, index: int) -> int:
        if not 0 <= index < self.length:
            raise IndexError(index)
        word, bit = divmod(index, WORD_BITS)
        return int(self.words[word] >> np.uint64(bit)) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if other.length != self.length:
            raise LengthMismatch(self.length, other.length)
        return BitVector(length=self.length, words=self.words ^ other.words)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self.length == other.length and bool(np.array_equal(self.words, other.words))

    def __hash__(self) -> int:
        return hash((self.length, self.words.tobytes()))

    def __str__(self) -> str:
        return "".join(str(bit) for bit in self.bits())

    def __repr__(self) -> str:
        return f"BitVector({self})"


@dataclass(frozen=True, slots=True)
class BitMatrix:
    ncols: int
    rows: Tuple[BitVector, ...]
    row_labels: Tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != len(self.row_labels):
            raise ValueError("row labels must be parallel to rows")
        for row in self.rows:
            if row.length != self.ncols:
                raise LengthMismatch(self.ncols, row.length)

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[int]],
        labels: Optional[Sequence[str]] = None,
        ncols: Optional[int] = None,
    ) -> "BitMatrix":
        width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
        vectors = tuple(BitVector.from_bits(row) for row in rows)
        names = tuple(labels) if labels is not None else tuple(f"r{i}" for i in range(len(rows)))
        return cls(ncols=width, rows=vectors, row_labels=names)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def to_array(self) -> np.ndarray:
        """Packed (nrows x words) uint64 copy, safe to eliminate in place."""
        if not self.rows:
            return np.zeros((0, _word_count(self.ncols)), dtype="<u8")
        return np.vstack([row.words for row in self.rows]).astype("<u8", copy=True)

    def to_lists(self) -> List[List[int]]:
        return [list(row.bits()) for row in self.rows]

    def permute_columns(self, permutation: Sequence[int]) -> "BitMatrix":
        """Column i of the result is column permutation[i] of this matrix."""
        rows = []
        for row in self.rows:
            bits = row.bits()
            rows.append(BitVector.from_bits([bits[j] for j in permutation]))
        return BitMatrix(ncols=self.ncols, rows=tuple(rows), row_labels=self.row_labels)

    def to_text(self, *, with_labels: bool = True) -> str:
        lines = []
        if with_labels:
            lines.append(f"{LABEL_HEADER} " + ",".join(self.row_labels))
        lines.extend(str(row) for row in self.rows)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BitMatrix":
        labels: Optional[List[str]] = None
        rows: List[BitVector] = []
        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if labels is None and not rows and line.startswith(LABEL_HEADER):
                body = line[len(LABEL_HEADER):].strip()
                labels = [label.strip() for label in body.split(",")] if body else []
                continue
            try:
                rows.append(BitVector.from_string(line))
            except ValueError as exc:
                raise ValueError(f"line {line_no}: {exc}") from exc
        ncols = rows[0].length if rows else 0
        names = tuple(labels) if labels is not None else tuple(f"r{i}" for i in range(len(rows)))
        return cls(ncols=ncols, rows=tuple(rows), row_labels=names)


def _eliminate(packed: np.ndarray, ncols: int) -> int:
    """Row-reduce ``packed`` in place; returns the rank."""
    nrows = packed.shape[0]
    pivot_row = 0
    for col in range(ncols):
        if pivot_row == nrows:
            break
        word, bit = divmod(col, WORD_BITS)
        mask = np.uint64(1) << np.uint64(bit)
        column = (packed[pivot_row:, word] & mask) != 0
        hits = np.flatnonzero(column)
        if hits.size == 0:
            continue
        pivot = pivot_row + int(hits[0])
        if pivot != pivot_row:
            packed[[pivot_row, pivot]] = packed[[pivot, pivot_row]]
        below = pivot_row + 1 + np.flatnonzero((packed[pivot_row + 1:, word] & mask) != 0)
        if below.size:
            packed[below] ^= packed[pivot_row]
        pivot_row += 1
    return pivot_row


def rank(m: BitMatrix) -> int:
    if m.nrows == 0 or m.ncols == 0:
        return 0
    result = _eliminate(m.to_array(), m.ncols)
    logger.debug(f"GF(2) rank of {m.nrows}x{m.ncols} matrix: {result}")
    return result


def append_rows(m: BitMatrix, extra: Iterable[Tuple[str, BitVector]]) -> BitMatrix:
    rows = list(m.rows)
    labels = list(m.row_labels)
    for label, vector in extra:
        if vector.length != m.ncols:
            raise LengthMismatch(m.ncols, vector.length)
        rows.append(vector)
        labels.append(label)
    return BitMatrix(ncols=m.ncols, rows=tuple(rows), row_labels=tuple(labels))


def in_row_space(m: BitMatrix, v: BitVector) -> bool:
    if v.length != m.ncols:
        raise LengthMismatch(m.ncols, v.length)
    if v.is_zero():
        return True
    return rank(append_rows(m, [("query", v)])) == rank(m)
