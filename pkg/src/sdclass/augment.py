"""Isomorph-free generation of self-dual codes by canonical augmentation.

A code of dimension ``k`` is grown from a systematic code ``(I | A)`` of
dimension ``k - 1`` by appending two equal columns ``x^T`` and the row
``(x | 0 | 1 0)`` for an odd-weight ``x``. Children of one parent are taken
one per orbit of the parent's automorphism group acting on ``x``, and a child
survives only if its appended pair is, up to automorphism, the pair its
canonical labelling puts last. Starting from a complete list of classes this
emits each class of the next dimension exactly once.
"""
from __future__ import annotations

import enum
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .canonical import (
    CanonicalOutcome,
    PseudoOrbitPartition,
    canonical_outcome,
    pseudo_orbits,
    special_cells,
)
from .code import SelfDualCode
from .errors import EqualLastColumns, EvenWeightVector, NotAutomorphism
from .gf2 import BitMatrix, BitVector, mat_mul, permute_columns
from .groups import AutomorphismGroup, pair_in_orbit
from .kernels import orbit_labels, popcount, span

log = logging.getLogger(__name__)


@dataclass
class SearchNode:
    """A systematic code together with its full automorphism group."""

    code: SelfDualCode
    aut: AutomorphismGroup

    @property
    def level(self) -> int:
        return self.code.k


@dataclass
class ExtensionOrbitSet:
    parent_dim: int
    reps: list[int]
    sizes: list[int]

    def vectors(self) -> list[BitVector]:
        return [BitVector(self.parent_dim, r) for r in self.reps]


@dataclass
class SearchStats:
    children: int = 0
    canonical: int = 0
    accepted: int = 0
    fast_rejects: int = 0

    def merge(self, other: SearchStats) -> None:
        self.children += other.children
        self.canonical += other.canonical
        self.accepted += other.accepted
        self.fast_rejects += other.fast_rejects


# parent and child construction

def parent(code: SelfDualCode) -> SelfDualCode:
    """Shorten on equal last coordinates, then puncture them away."""
    n = code.n
    rows = code.gen.row_ints()
    odd = [i for i, r in enumerate(rows) if (r & 1) != ((r >> 1) & 1)]
    if not odd:
        raise EqualLastColumns("the last two coordinates agree on every codeword")
    pivot = rows[odd[0]]
    sub = []
    for i, r in enumerate(rows):
        if i == odd[0]:
            continue
        if (r & 1) != ((r >> 1) & 1):
            r ^= pivot
        sub.append(r >> 2)
    return SelfDualCode(BitMatrix(sub, n - 2))


def aut_to_gl(perm: Sequence[int], g1: BitMatrix) -> BitMatrix:
    """The matrix ``A_P`` with ``P(G1) = A_P G1`` for systematic ``G1``."""
    m = g1.rows
    moved = permute_columns(g1, perm)
    a_p = BitMatrix(moved.row_data >> np.uint64(g1.cols - m), m)
    if mat_mul(a_p, g1) != moved:
        raise NotAutomorphism("permutation does not preserve the code")
    return a_p


def _vector_images(a_p: BitMatrix) -> np.ndarray:
    cols = np.array([a_p.column(j).bits for j in range(a_p.cols)], dtype=np.uint64)
    return span(cols).astype(np.int64)


def extension_orbits(c1: SelfDualCode, aut: AutomorphismGroup) -> ExtensionOrbitSet:
    """One representative (the smallest) per orbit of odd-weight extension vectors."""
    m = c1.k
    size = 1 << m
    index = np.arange(size, dtype=np.uint64)
    parity = popcount(index) & 1
    images = [_vector_images(aut_to_gl(g, c1.gen)) for g in aut.generators]
    for img in images:
        if not np.array_equal(parity[img], parity):
            raise NotAutomorphism("image matrix does not preserve parity")
    if images:
        labels = orbit_labels(np.stack(images))
    else:
        labels = np.arange(size, dtype=np.int64)
    odd = parity == 1
    reps, counts = np.unique(labels[odd], return_counts=True)
    return ExtensionOrbitSet(m, [int(r) for r in reps], [int(c) for c in counts])


def extend(c1: SelfDualCode, x: int | BitVector) -> SelfDualCode:
    """The child generated by ``(x | 0 | 1 0)`` over ``(I | A | x^T x^T)``."""
    m = c1.k
    bits = x.bits if isinstance(x, BitVector) else int(x)
    if bits.bit_count() % 2 == 0:
        raise EvenWeightVector(f"extension vector {bits:0{m}b} has even weight")
    n = c1.n + 2
    top = (bits << (n - m)) | 0b10
    rows = [top]
    for i, r in enumerate(c1.gen.row_ints()):
        bit = (bits >> (m - 1 - i)) & 1
        rows.append((r << 2) | (0b11 if bit else 0))
    return SelfDualCode(BitMatrix(rows, n))


# parent tests

class FastVerdict(enum.Enum):
    REJECT = "reject"
    UNKNOWN = "unknown"


def parent_test_fast(code: SelfDualCode,
                     part: PseudoOrbitPartition | None = None) -> FastVerdict:
    """Reject children whose appended pair lies outside the special cells."""
    part = part or pseudo_orbits(code)
    cells = special_cells(part, code.columns())
    if cells is None:
        return FastVerdict.UNKNOWN
    last_cell, prev_cell = cells
    a, b = code.n - 2, code.n - 1
    if prev_cell is last_cell:
        ok = a in last_cell and b in last_cell
    else:
        ok = (a in last_cell and b in prev_cell) or (b in last_cell and a in prev_cell)
    return FastVerdict.UNKNOWN if ok else FastVerdict.REJECT


def parent_test_full(code: SelfDualCode,
                     outcome: CanonicalOutcome | None = None) -> tuple[bool, CanonicalOutcome]:
    """Pass iff an automorphism carries the special pair onto the last two coordinates."""
    outcome = outcome or canonical_outcome(code)
    n = code.n
    c1, c2 = outcome.special
    passed = pair_in_orbit(outcome.aut, (c1, c2), (n - 2, n - 1))
    return passed, outcome


# search

def node_from_outcome(outcome: CanonicalOutcome) -> SearchNode:
    """Systematic form of the canonical code, with the group moved along."""
    canon_aut = outcome.aut.conjugate(outcome.phi.images)
    sys_code, perm = outcome.canon.systematic()
    return SearchNode(sys_code, canon_aut.conjugate(perm))


def make_node(code: SelfDualCode) -> SearchNode:
    return node_from_outcome(canonical_outcome(code))


def children(node: SearchNode, stats: SearchStats | None = None) -> list[SearchNode]:
    """Accepted children of ``node``, in ascending order of extension vector."""
    stats = stats if stats is not None else SearchStats()
    out = []
    for x in extension_orbits(node.code, node.aut).reps:
        child = extend(node.code, x)
        stats.children += 1
        part = pseudo_orbits(child)
        if parent_test_fast(child, part) is FastVerdict.REJECT:
            stats.fast_rejects += 1
            continue
        stats.canonical += 1
        passed, outcome = parent_test_full(child, canonical_outcome(child, part))
        if passed:
            stats.accepted += 1
            out.append(node_from_outcome(outcome))
    return out


def _as_node(root: SelfDualCode | SearchNode) -> SearchNode:
    return root if isinstance(root, SearchNode) else make_node(root)


def augment(roots: Iterable[SelfDualCode | SearchNode], k: int, *,
            stats: SearchStats | None = None,
            on_node: Callable[[SearchNode], None] | None = None) -> list[SearchNode]:
    """Depth-first augmentation from complete roots of dimension ``r < k``.

    Returns one node per equivalence class of dimension ``k``. ``on_node`` is
    called for every accepted node at every level below and at ``k``.
    """
    stats = stats if stats is not None else SearchStats()
    out: list[SearchNode] = []

    def walk(node: SearchNode) -> None:
        if node.level == k:
            out.append(node)
            return
        for child in children(node, stats):
            if on_node is not None:
                on_node(child)
            walk(child)

    for root in roots:
        node = _as_node(root)
        if node.level > k:
            raise ValueError(f"root of dimension {node.level} exceeds target {k}")
        walk(node)
    return out


def split_round_robin(items: Sequence, parts: int) -> list[list]:
    if parts < 1:
        raise ValueError("parts must be at least 1")
    return [list(items[i::parts]) for i in range(parts)]


def _run_part(args) -> tuple[list[SearchNode], SearchStats]:
    roots, k = args
    stats = SearchStats()
    return augment(roots, k, stats=stats), stats


def partition_run(roots: Sequence[SelfDualCode | SearchNode], parts: int, k: int, *,
                  jobs: int = 1, stats: SearchStats | None = None) -> list[SearchNode]:
    """Run independent augmentations on a round-robin split and concatenate."""
    chunks = split_round_robin(list(roots), parts)
    tasks = [(chunk, k) for chunk in chunks]
    if jobs > 1 and parts > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_part, tasks))
    else:
        results = [_run_part(t) for t in tasks]
    merged: list[SearchNode] = []
    for nodes, part_stats in results:
        merged.extend(nodes)
        if stats is not None:
            stats.merge(part_stats)
    keys = {node.code.gen for node in merged}
    if len(keys) != len(merged):
        raise AssertionError("duplicate canonical forms across partitions")
    return merged
