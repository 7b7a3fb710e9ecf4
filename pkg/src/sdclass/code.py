"""Binary self-dual codes: validation, codeword enumeration and weight data."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import NotSelfDual, OddLength
from .gf2 import (
    BitMatrix,
    BitVector,
    format_bits,
    is_self_orthogonal,
    permute_columns,
    rref,
    systematic_form,
)
from .kernels import popcount, span


@dataclass(frozen=True)
class CodewordSet:
    """Every nonzero codeword of weight at most ``w``, ascending as bit strings."""

    w: int
    n: int
    words: np.ndarray

    def __len__(self) -> int:
        return int(self.words.shape[0])

    def vectors(self) -> list[BitVector]:
        return [BitVector(self.n, int(x)) for x in self.words]

    def incidence(self) -> np.ndarray:
        """``uint8`` matrix with one row per word and one column per coordinate."""
        return BitMatrix(self.words, self.n).to_array()


class SelfDualCode:
    """A binary self-dual ``[n, n/2]`` code.

    ``gen`` is the reduced row echelon form of the generator matrix, which is
    unique for the code, so two instances are equal exactly when they are the
    same set of codewords. Coordinates are never reordered implicitly; call
    :meth:`systematic` for the ``(I | A)`` shape.
    """

    def __init__(self, gen: BitMatrix, *, _checked: bool = False):
        if not _checked:
            n = gen.cols
            if n % 2:
                raise OddLength(f"length {n} is odd")
            reduced, pivots = rref(gen)
            if len(pivots) != n // 2:
                raise NotSelfDual(f"rank {len(pivots)} != {n // 2}")
            if not is_self_orthogonal(reduced):
                raise NotSelfDual("generator rows are not mutually orthogonal")
            gen = reduced
        self.gen = gen
        self.n = gen.cols
        self.k = gen.rows

    @classmethod
    def from_generator(cls, g: BitMatrix | Sequence[str]) -> SelfDualCode:
        if not isinstance(g, BitMatrix):
            g = BitMatrix.from_strings(list(g))
        return cls(g)

    @classmethod
    def i2(cls) -> SelfDualCode:
        return cls(BitMatrix([0b11], 2))

    def __eq__(self, other) -> bool:
        return isinstance(other, SelfDualCode) and self.gen == other.gen

    def __hash__(self) -> int:
        return hash(self.gen)

    def __repr__(self) -> str:
        return f"SelfDualCode(n={self.n}, d={self.min_weight}, rows={self.gen.to_strings()})"

    # codeword data

    @cached_property
    def words(self) -> np.ndarray:
        """All ``2**k`` codewords; index ``i`` is the combination with coefficient bits ``i``."""
        return span(self.gen.row_data)

    @cached_property
    def weights(self) -> np.ndarray:
        return popcount(self.words)

    @cached_property
    def weight_distribution(self) -> tuple[int, ...]:
        counts = np.bincount(self.weights, minlength=self.n + 1)
        return tuple(int(c) for c in counts)

    @cached_property
    def min_weight(self) -> int:
        nz = self.weights[self.weights > 0]
        return int(nz.min()) if nz.size else 0

    @cached_property
    def doubly_even(self) -> bool:
        return bool(np.all(self.weights % 4 == 0))

    @property
    def type_label(self) -> str:
        return "II" if self.doubly_even else "I"

    def codewords_up_to_weight(self, w: int) -> CodewordSet:
        sel = (self.weights > 0) & (self.weights <= w)
        return CodewordSet(w, self.n, np.sort(self.words[sel]))

    @cached_property
    def spanning_weight(self) -> int:
        return smallest_spanning_weight(self)

    def contains(self, word: int | BitVector) -> bool:
        bits = word.bits if isinstance(word, BitVector) else int(word)
        reduced = self.gen.row_ints()
        for r in reduced:
            top = r.bit_length() - 1
            if (bits >> top) & 1:
                bits ^= r
        return bits == 0

    # coordinate structure

    def columns(self) -> list[int]:
        """Each coordinate's column of ``gen`` as a ``k``-bit integer."""
        return [c.bits for c in (self.gen.column(j) for j in range(self.n))]

    def equal_column_pairs(self) -> list[tuple[int, int]]:
        cols = self.columns()
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n) if cols[i] == cols[j]]

    def permute(self, perm: Sequence[int] | np.ndarray) -> SelfDualCode:
        """The code with coordinate ``i`` moved to position ``perm[i]``."""
        g = permute_columns(self.gen, perm)
        return SelfDualCode(BitMatrix(rref(g)[0].row_data, self.n), _checked=True)

    def systematic(self) -> tuple[SelfDualCode, np.ndarray]:
        """Equivalent code with generator ``(I_k | A)`` and the permutation used."""
        g, perm = systematic_form(self.gen)
        return SelfDualCode(g, _checked=True), perm

    def is_systematic(self) -> bool:
        k, n = self.k, self.n
        return all(int(r) >> (n - k) == 1 << (k - 1 - i) for i, r in enumerate(self.gen.row_data))

    def bit_strings(self) -> list[str]:
        return [format_bits(int(w), self.n) for w in self.words]


def weight_distribution(code: SelfDualCode) -> tuple[int, ...]:
    return code.weight_distribution


def codewords_up_to_weight(code: SelfDualCode, w: int) -> CodewordSet:
    return code.codewords_up_to_weight(w)


def smallest_spanning_weight(code: SelfDualCode) -> int:
    """Least even ``w`` whose codewords of weight at most ``w`` span the code."""
    order = np.argsort(code.weights, kind="stable")
    basis: dict[int, int] = {}
    for idx in order:
        wt = int(code.weights[idx])
        if wt == 0:
            continue
        x = int(code.words[idx])
        while x:
            top = x.bit_length() - 1
            if top not in basis:
                basis[top] = x
                break
            x ^= basis[top]
        if len(basis) == code.k:
            return wt
    return 0


def direct_sum(*codes: SelfDualCode) -> SelfDualCode:
    n = sum(c.n for c in codes)
    rows: list[int] = []
    offset = n
    for c in codes:
        offset -= c.n
        rows.extend(int(r) << offset for r in c.gen.row_data)
    return SelfDualCode(BitMatrix(rows, n))
