"""Canonical forms, canonical permutations and automorphism groups of codes.

A code is labelled through the incidence structure of its codewords of weight
at most ``w*`` (the least weight whose words span the code): permutations
that fix this word set are exactly the automorphisms of the code. The
labelling is an individualisation-refinement search in the style of
nauty: colour refinement seeded by the coordinate invariants, depth-first
branching on a target cell, pruning with automorphisms found on the way and
with refinement invariants compared against the best path. The canonical
leaf maximises (path invariants, relabelled word set).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .code import SelfDualCode
from .groups import AutomorphismGroup, CoordPermutation, pair_in_orbit
from .kernels import certificate, orbit_labels, refine


# coordinate invariants and pseudo-orbits

def invariants_f1_f2(code: SelfDualCode) -> tuple[np.ndarray, np.ndarray]:
    """Per-coordinate counts over the minimum weight words and their parities."""
    md = code.codewords_up_to_weight(code.min_weight).words
    n = code.n
    folded = int(np.bitwise_xor.reduce(md)) if md.size else 0
    f1 = np.array([(folded >> (n - 1 - i)) & 1 for i in range(n)], dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.uint64)
    f2 = ((md[:, None] >> shifts) & np.uint64(1)).sum(axis=0).astype(np.int64)
    return f1, f2


@dataclass(frozen=True)
class PseudoOrbitPartition:
    """Coordinates grouped by equal invariant values, cells in ``≺`` order.

    Cells are ordered by size, then by the invariant pair ``(f1, f2)``.
    """

    cells: tuple[tuple[int, ...], ...]
    values: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def cell_index(self) -> np.ndarray:
        out = np.empty(self.n, dtype=np.int64)
        for idx, cell in enumerate(self.cells):
            out[list(cell)] = idx
        return out

    def cell_of(self, i: int) -> int:
        return next(idx for idx, cell in enumerate(self.cells) if i in cell)


def pseudo_orbits(code: SelfDualCode) -> PseudoOrbitPartition:
    f1, f2 = invariants_f1_f2(code)
    values = tuple((int(a), int(b)) for a, b in zip(f1, f2))
    groups: dict[tuple[int, int], list[int]] = {}
    for i, v in enumerate(values):
        groups.setdefault(v, []).append(i)
    ordered = sorted(groups.items(), key=lambda kv: (len(kv[1]), kv[0]))
    return PseudoOrbitPartition(tuple(tuple(c) for _, c in ordered), values)


def special_cells(part: PseudoOrbitPartition,
                  columns: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Cells that must hold the last and the next-to-last canonical coordinate.

    Skips two-element cells whose columns coincide. A singleton cell pairs
    with the cell after it; any larger cell supplies both coordinates.
    Returns ``None`` only for ``i2``, where every cell is such an equal pair.
    """
    cells = part.cells
    for idx, cell in enumerate(cells):
        if len(cell) == 2 and columns[cell[0]] == columns[cell[1]]:
            continue
        if len(cell) == 1:
            return cell, cells[idx + 1]
        return cell, cell
    return None


# search

@dataclass
class _Leaf:
    pos: np.ndarray
    cert: bytes
    invs: list[int]
    seq: list[int]


def _compare(a: list[int], b: list[int]) -> int:
    """Compare ``a`` with the same-length prefix of ``b`` as sequences."""
    pb = b[:len(a)]
    if a == pb:
        return 0 if len(pb) == len(a) else 1
    return 1 if a > pb else -1


def _common_prefix(a: list[int], b: list[int]) -> int:
    j = 0
    for x, y in zip(a, b):
        if x != y:
            break
        j += 1
    return j


class _Search:
    def __init__(self, inc: np.ndarray, coord_cell: np.ndarray, word_cell: np.ndarray):
        self.inc = np.ascontiguousarray(inc, dtype=np.uint8)
        self.n = inc.shape[1]
        self.autos: list[np.ndarray] = []
        self.first: _Leaf | None = None
        self.best: _Leaf | None = None
        self.nodes = 0
        self.leaves = 0
        cc, wc, inv = refine(self.inc, coord_cell.astype(np.int64), word_cell.astype(np.int64))
        self._root = (cc, wc, [int(inv)])

    def run(self) -> None:
        cc, wc, invs = self._root
        self._explore(cc, wc, invs, [])

    def _orbits_fixing(self, seq: list[int]) -> np.ndarray | None:
        fixing = [g for g in self.autos if all(g[p] == p for p in seq)]
        if not fixing:
            return None
        return orbit_labels(np.stack(fixing))

    def _explore(self, cc: np.ndarray, wc: np.ndarray, invs: list[int], seq: list[int]) -> int:
        self.nodes += 1
        level = len(seq)
        ncells = int(cc.max()) + 1
        if ncells == self.n:
            return self._leaf(cc, invs, seq)
        sizes = np.bincount(cc, minlength=ncells)
        sizes[sizes == 1] = self.n + 1
        target = int(np.argmin(sizes))
        members = np.flatnonzero(cc == target)
        explored: list[int] = []
        seen_autos = -1
        labels = None
        for v in members:
            v = int(v)
            if explored and len(self.autos) != seen_autos:
                labels = self._orbits_fixing(seq)
                seen_autos = len(self.autos)
            if labels is not None and any(labels[v] == labels[e] for e in explored):
                continue
            explored.append(v)
            child = np.where(cc > target, cc + 1, cc)
            child[(cc == target)] = target + 1
            child[v] = target
            cc2, wc2, inv = refine(self.inc, child, wc)
            child_invs = invs + [int(inv)]
            eq_first = child_invs == self.first.invs[:len(child_invs)] if self.first else True
            cmp_best = _compare(child_invs, self.best.invs) if self.best else 0
            if not eq_first and cmp_best < 0:
                continue
            r = self._explore(cc2, wc2, child_invs, seq + [v])
            if r < level:
                return r
        return level - 1

    def _leaf(self, pos: np.ndarray, invs: list[int], seq: list[int]) -> int:
        self.leaves += 1
        level = len(seq)
        cert = certificate(self.inc, pos).astype(">u8").tobytes()
        leaf = _Leaf(pos.copy(), cert, invs, seq)
        if self.first is None:
            self.first = self.best = leaf
            return level - 1
        if invs == self.first.invs and cert == self.first.cert:
            self._record(self.first.pos, pos)
            return _common_prefix(seq, self.first.seq)
        c = _compare(invs, self.best.invs)
        if c == 0:
            if cert == self.best.cert:
                self._record(self.best.pos, pos)
                return _common_prefix(seq, self.best.seq)
            if cert > self.best.cert:
                self.best = leaf
        elif c > 0:
            self.best = leaf
        return level - 1

    def _record(self, pos_a: np.ndarray, pos_b: np.ndarray) -> None:
        inv_a = np.empty_like(pos_a)
        inv_a[pos_a] = np.arange(self.n)
        self.autos.append(inv_a[pos_b])


# public entry points

@dataclass
class CanonicalOutcome:
    """``phi`` maps the input code onto ``canon``; ``aut`` is the full group.

    ``special`` holds the input coordinates sent to the last and the
    next-to-last position.
    """

    canon: SelfDualCode
    phi: CoordPermutation
    aut: AutomorphismGroup
    special: tuple[int, int] | None = None
    nodes: int = 0
    leaves: int = 0
    partition: PseudoOrbitPartition | None = field(default=None, repr=False)


def _move_last(n: int, pos: np.ndarray, c1: int, c2: int) -> np.ndarray:
    """Compose ``pos`` with the shift placing ``c2`` then ``c1`` at the end."""
    p1, p2 = int(pos[c1]), int(pos[c2])
    order = [p for p in range(n) if p not in (p1, p2)] + [p2, p1]
    shift = np.empty(n, dtype=np.int64)
    shift[order] = np.arange(n)
    return shift[pos]


def canonical_outcome(code: SelfDualCode,
                      part: PseudoOrbitPartition | None = None) -> CanonicalOutcome:
    n = code.n
    part = part or pseudo_orbits(code)
    words = code.codewords_up_to_weight(code.spanning_weight)
    inc = words.incidence()
    word_cell = np.unique(inc.sum(axis=1), return_inverse=True)[1].astype(np.int64)
    search = _Search(inc, part.cell_index(), word_cell.reshape(-1))
    search.run()
    pos = search.best.pos
    columns = code.columns()
    special = None
    cells = special_cells(part, columns) if code.k >= 2 else None
    if cells is not None:
        last_cell, prev_cell = cells
        c1 = max(last_cell, key=lambda i: pos[i])
        if prev_cell is last_cell:
            candidates = [i for i in last_cell if columns[i] != columns[c1]]
        else:
            candidates = list(prev_cell)
        c2 = max(candidates, key=lambda i: pos[i])
        pos = _move_last(n, pos, c1, c2)
        special = (int(c1), int(c2))
    aut = AutomorphismGroup.from_generators(n, search.autos, base_hint=search.first.seq)
    phi = CoordPermutation(tuple(int(x) for x in pos))
    return CanonicalOutcome(code.permute(pos), phi, aut, special,
                            search.nodes, search.leaves, part)


def canonical_form(code: SelfDualCode) -> SelfDualCode:
    return canonical_outcome(code).canon


def automorphism_group(code: SelfDualCode) -> AutomorphismGroup:
    return canonical_outcome(code).aut


def are_equivalent(a: SelfDualCode, b: SelfDualCode) -> bool:
    return a.n == b.n and canonical_form(a) == canonical_form(b)


__all__ = [
    "CanonicalOutcome",
    "PseudoOrbitPartition",
    "are_equivalent",
    "automorphism_group",
    "canonical_form",
    "canonical_outcome",
    "invariants_f1_f2",
    "pair_in_orbit",
    "pseudo_orbits",
    "special_cells",
]
