"""Bit-packed vectors and matrices over GF(2).

A row of length ``n`` is one ``uint64`` word; coordinate ``i`` (0-based) lives
in bit ``n - 1 - i``, so comparing words as integers is the same as comparing
the rows as bit strings. Lengths up to 64 are supported, which covers every
code length this package classifies.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, RankDeficient
from .kernels import permute_words, popcount

MAX_LENGTH = 64


def _bit(n: int, i: int) -> int:
    return 1 << (n - 1 - i)


def parse_bits(s: str) -> int:
    s = s.strip()
    if s and set(s) - {"0", "1"}:
        raise ValueError(f"not a bit string: {s!r}")
    return int(s, 2) if s else 0


def format_bits(value: int, length: int) -> str:
    return format(int(value), f"0{length}b") if length else ""


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int = 0

    def __post_init__(self):
        if not 0 <= self.length <= MAX_LENGTH:
            raise ValueError(f"length {self.length} outside [0, {MAX_LENGTH}]")
        if self.bits >> self.length:
            raise ValueError("bits set beyond the vector length")

    @classmethod
    def from_list(cls, entries: Sequence[int]) -> BitVector:
        value = 0
        for e in entries:
            value = (value << 1) | (int(e) & 1)
        return cls(len(entries), value)

    @classmethod
    def from_str(cls, s: str) -> BitVector:
        s = s.strip()
        return cls(len(s), parse_bits(s))

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> (self.length - 1 - i)) & 1

    def __iter__(self):
        return (self[i] for i in range(self.length))

    def __xor__(self, other: BitVector) -> BitVector:
        if other.length != self.length:
            raise DimensionMismatch(f"{self.length} != {other.length}")
        return BitVector(self.length, self.bits ^ other.bits)

    def weight(self) -> int:
        return self.bits.bit_count()

    def dot(self, other: BitVector) -> int:
        if other.length != self.length:
            raise DimensionMismatch(f"{self.length} != {other.length}")
        return (self.bits & other.bits).bit_count() & 1

    def __str__(self) -> str:
        return format_bits(self.bits, self.length)


class BitMatrix:
    """A ``rows x cols`` matrix over GF(2), one ``uint64`` word per row.

    Instances are treated as immutable values; operations return new matrices.
    """

    __slots__ = ("row_data", "cols")

    def __init__(self, row_data: Iterable[int] | np.ndarray, cols: int):
        if not 0 <= cols <= MAX_LENGTH:
            raise ValueError(f"column count {cols} outside [0, {MAX_LENGTH}]")
        data = np.array([int(r) for r in row_data], dtype=np.uint64) if not isinstance(
            row_data, np.ndarray) else row_data.astype(np.uint64, copy=True)
        if cols < MAX_LENGTH and data.size and int(data.max()) >> cols:
            raise ValueError("row has bits beyond the column count")
        data.setflags(write=False)
        self.row_data = data
        self.cols = cols

    # construction helpers

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> BitMatrix:
        rows = [r.strip() for r in rows]
        cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionMismatch("rows of unequal length")
        return cls([parse_bits(r) for r in rows], cols)

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> BitMatrix:
        return cls.from_strings(["".join(str(int(b) & 1) for b in r) for r in rows])

    @classmethod
    def from_vectors(cls, vectors: Sequence[BitVector]) -> BitMatrix:
        cols = vectors[0].length if vectors else 0
        if any(v.length != cols for v in vectors):
            raise DimensionMismatch("vectors of unequal length")
        return cls([v.bits for v in vectors], cols)

    @classmethod
    def identity(cls, size: int) -> BitMatrix:
        return cls([_bit(size, i) for i in range(size)], size)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(np.zeros(rows, dtype=np.uint64), cols)

    # basic accessors

    @property
    def rows(self) -> int:
        return int(self.row_data.shape[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, int(self.row_data[i]))

    def row_ints(self) -> list[int]:
        return [int(r) for r in self.row_data]

    def to_strings(self) -> list[str]:
        return [format_bits(int(r), self.cols) for r in self.row_data]

    def to_array(self) -> np.ndarray:
        """Dense ``uint8`` copy with shape ``(rows, cols)``."""
        if self.cols == 0:
            return np.zeros((self.rows, 0), dtype=np.uint8)
        shifts = np.arange(self.cols - 1, -1, -1, dtype=np.uint64)
        return ((self.row_data[:, None] >> shifts) & np.uint64(1)).astype(np.uint8)

    def column(self, j: int) -> BitVector:
        value = 0
        for r in self.row_data:
            value = (value << 1) | ((int(r) >> (self.cols - 1 - j)) & 1)
        return BitVector(self.rows, value)

    def row_weights(self) -> np.ndarray:
        return popcount(self.row_data)

    def __eq__(self, other) -> bool:
        return (isinstance(other, BitMatrix) and self.cols == other.cols
                and np.array_equal(self.row_data, other.row_data))

    def __hash__(self) -> int:
        return hash((self.cols, self.row_data.tobytes()))

    def __repr__(self) -> str:
        return f"BitMatrix({self.to_strings()!r})"

    def transpose(self) -> BitMatrix:
        rows = [self.column(j).bits for j in range(self.cols)]
        return BitMatrix(rows, self.rows)

    def submatrix(self, cols: Sequence[int]) -> BitMatrix:
        """Columns ``cols`` (in that order) of every row."""
        out = np.zeros(self.rows, dtype=np.uint64)
        width = len(cols)
        for t, j in enumerate(cols):
            bit = (self.row_data >> np.uint64(self.cols - 1 - j)) & np.uint64(1)
            out |= bit << np.uint64(width - 1 - t)
        return BitMatrix(out, width)


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row echelon form with greedy leftmost pivots.

    Returns the nonzero rows (ordered by pivot) and the pivot columns.
    """
    work = m.row_ints()
    n = m.cols
    pivots: list[int] = []
    top = 0
    for col in range(n):
        mask = _bit(n, col)
        pivot = next((r for r in range(top, len(work)) if work[r] & mask), None)
        if pivot is None:
            continue
        work[top], work[pivot] = work[pivot], work[top]
        for r in range(len(work)):
            if r != top and work[r] & mask:
                work[r] ^= work[top]
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return BitMatrix(work[:top], n), pivots


def rank(m: BitMatrix) -> int:
    return len(rref(m)[1])


def rank_of_words(words: Iterable[int], n: int) -> int:
    """Rank of a collection of length-``n`` words given as integers."""
    basis: dict[int, int] = {}
    for w in words:
        w = int(w)
        while w:
            top = w.bit_length() - 1
            if top not in basis:
                basis[top] = w
                break
            w ^= basis[top]
    return len(basis)


def systematic_form(g: BitMatrix) -> tuple[BitMatrix, np.ndarray]:
    """Return ``(I | A)`` and the column permutation that produced it.

    ``perm[i]`` is the new position of column ``i``: pivot columns move to the
    front and the rest follow, each group keeping its relative order.
    """
    reduced, pivots = rref(g)
    if len(pivots) < g.rows:
        raise RankDeficient(f"rank {len(pivots)} < {g.rows} rows")
    pivot_set = set(pivots)
    order = pivots + [j for j in range(g.cols) if j not in pivot_set]
    perm = np.empty(g.cols, dtype=np.int64)
    perm[order] = np.arange(g.cols)
    return permute_columns(reduced, perm), perm


def permute_columns(m: BitMatrix, perm: Sequence[int] | np.ndarray) -> BitMatrix:
    """Move column ``i`` of ``m`` to position ``perm[i]``."""
    perm = np.asarray(perm, dtype=np.int64)
    if perm.shape != (m.cols,):
        raise DimensionMismatch("permutation degree differs from column count")
    return BitMatrix(permute_words(m.row_data, perm, m.cols), m.cols)


def is_self_orthogonal(g: BitMatrix) -> bool:
    rows = g.row_ints()
    for i, a in enumerate(rows):
        for b in rows[i:]:
            if (a & b).bit_count() & 1:
                return False
    return True


def mat_vec(a: BitMatrix, x: BitVector) -> BitVector:
    """``A x^T`` as a vector of length ``a.rows``."""
    if x.length != a.cols:
        raise DimensionMismatch(f"matrix has {a.cols} columns, vector length {x.length}")
    value = 0
    for r in a.row_data:
        value = (value << 1) | ((int(r) & x.bits).bit_count() & 1)
    return BitVector(a.rows, value)


def mat_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.cols != b.rows:
        raise DimensionMismatch(f"{a.shape} x {b.shape}")
    brows = b.row_ints()
    out = []
    for r in a.row_ints():
        acc = 0
        for t in range(a.cols):
            if (r >> (a.cols - 1 - t)) & 1:
                acc ^= brows[t]
        out.append(acc)
    return BitMatrix(out, b.cols)
