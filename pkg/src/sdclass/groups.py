"""Coordinate permutations, automorphism groups and exact group orders.

Permutations are 0-based: ``p[i]`` is the position coordinate ``i`` moves to.
Products compose right to left, ``(p * q)[i] == p[q[i]]``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """``p`` after ``q``."""
    return tuple(map(p.__getitem__, q))


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


@dataclass(frozen=True)
class CoordPermutation:
    images: Perm

    def __post_init__(self):
        if not is_permutation(self.images):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> CoordPermutation:
        return cls(identity(n))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: CoordPermutation) -> CoordPermutation:
        return CoordPermutation(compose(self.images, other.images))

    def inverse(self) -> CoordPermutation:
        return CoordPermutation(invert(self.images))

    def array(self) -> np.ndarray:
        return np.asarray(self.images, dtype=np.int64)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles with 1-based points, for display."""
        seen: set[int] = set()
        out = []
        for i in range(self.n):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(c + 1 for c in cyc))
        return out


class _Level:
    __slots__ = ("base", "trans", "inv", "checked")

    def __init__(self, base: int, n: int):
        self.base = base
        self.trans: dict[int, Perm] = {base: identity(n)}
        self.inv: dict[int, Perm] = {base: identity(n)}
        self.checked: set[tuple[int, int]] = set()


class StabilizerChain:
    """Deterministic Schreier-Sims over a fixed degree ``n``.

    ``base_hint`` lists preferred base points; a search's first path makes a
    good base because the group usually fixes few points beyond it.
    Transversals only ever grow, so a Schreier generator that once sifted to
    the identity never needs to be sifted again.
    """

    def __init__(self, n: int, gens: Iterable[Perm] = (), base_hint: Sequence[int] = ()):
        self.n = n
        self.levels: list[_Level] = []
        # strong generators with the index of the first base point they move
        self.strong: list[tuple[Perm, int]] = []
        self._hint = list(base_hint)
        self._id = identity(n)
        for g in gens:
            g = tuple(int(x) for x in g)
            residue, j = self.sift(g)
            if residue != self._id:
                self._add_strong(residue, j)
        self._complete()

    @property
    def base(self) -> list[int]:
        return [lv.base for lv in self.levels]

    def order(self) -> int:
        out = 1
        for lv in self.levels:
            out *= len(lv.trans)
        return out

    def orbit_sizes(self) -> list[int]:
        return [len(lv.trans) for lv in self.levels]

    def sift(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            u = lv.inv.get(g[lv.base])
            if u is None:
                return g, i
            g = compose(u, g)
        return g, len(self.levels)

    def contains(self, g: Sequence[int]) -> bool:
        residue, _ = self.sift(tuple(int(x) for x in g))
        return residue == self._id

    def _new_base(self, g: Perm) -> int:
        used = set(self.base)
        for b in self._hint:
            if b not in used and g[b] != b:
                return b
        return next(i for i in range(self.n) if g[i] != i)

    def _gens_at(self, level: int) -> list[tuple[int, Perm]]:
        return [(idx, s) for idx, (s, depth) in enumerate(self.strong) if depth >= level]

    def _add_strong(self, g: Perm, j: int) -> None:
        if j == len(self.levels):
            self.levels.append(_Level(self._new_base(g), self.n))
        self.strong.append((g, j))
        for level in range(j + 1):
            self._close_orbit(level)

    def _close_orbit(self, level: int) -> None:
        lv = self.levels[level]
        gens = [s for _, s in self._gens_at(level)]
        queue = deque(lv.trans)
        while queue:
            p = queue.popleft()
            u = lv.trans[p]
            for s in gens:
                q = s[p]
                if q not in lv.trans:
                    t = compose(s, u)
                    lv.trans[q] = t
                    lv.inv[q] = invert(t)
                    queue.append(q)

    def _complete(self) -> None:
        i = len(self.levels) - 1
        while i >= 0:
            lv = self.levels[i]
            grew = False
            for idx, s in self._gens_at(i):
                for p in list(lv.trans):
                    if (p, idx) in lv.checked:
                        continue
                    lv.checked.add((p, idx))
                    h = compose(lv.inv[s[p]], compose(s, lv.trans[p]))
                    residue, j = self.sift(h, i + 1)
                    if residue != self._id:
                        self._add_strong(residue, j)
                        i = j
                        grew = True
                        break
                if grew:
                    break
            if not grew:
                i -= 1


class AutomorphismGroup:
    """A permutation group given by generators.

    The order is computed on first use with Schreier-Sims; generation only
    needs the generators, so most groups never pay for it.
    """

    def __init__(self, n: int, generators: Iterable[Sequence[int]],
                 order: int | None = None, base_hint: Sequence[int] = ()):
        self.n = n
        self.generators: list[Perm] = [tuple(int(x) for x in g) for g in generators]
        self._order = order
        self.base_hint = list(base_hint)

    @classmethod
    def from_generators(cls, n: int, gens: Iterable[Sequence[int]],
                        base_hint: Sequence[int] = ()) -> AutomorphismGroup:
        ident = identity(n)
        gens = [g for g in (tuple(int(x) for x in g) for g in gens) if g != ident]
        return cls(n, gens, None, base_hint)

    def __repr__(self) -> str:
        return f"AutomorphismGroup(n={self.n}, generators={len(self.generators)}, order={self.order})"

    def chain(self) -> StabilizerChain:
        return StabilizerChain(self.n, self.generators, self.base_hint)

    @property
    def order(self) -> int:
        if self._order is None:
            self._order = self.chain().order()
        return self._order

    def conjugate(self, perm: Sequence[int]) -> AutomorphismGroup:
        """The group ``perm * G * perm^-1`` acting on the relabelled coordinates."""
        p = tuple(int(x) for x in perm)
        pinv = invert(p)
        gens = [compose(p, compose(g, pinv)) for g in self.generators]
        return AutomorphismGroup(self.n, gens, self._order, [p[b] for b in self.base_hint])

    def point_orbits(self) -> list[list[int]]:
        return point_orbits(self.n, self.generators)

    def permutations(self) -> list[CoordPermutation]:
        return [CoordPermutation(g) for g in self.generators]

    def elements(self, limit: int = 100_000) -> set[Perm]:
        """Every group element; only sensible for small groups."""
        if self.order > limit:
            raise ValueError(f"group of order {self.order} exceeds limit {limit}")
        start = identity(self.n)
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for g in self.generators:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen


def point_orbits(n: int, gens: Sequence[Perm]) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for i in range(n):
            a, b = find(i), find(g[i])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def pair_in_orbit(aut: AutomorphismGroup, p: Iterable[int], q: Iterable[int]) -> bool:
    """True iff some element of ``aut`` maps the unordered pair ``p`` onto ``q``."""
    start = frozenset(p)
    target = frozenset(q)
    if start == target:
        return True
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        a, b = tuple(cur)
        for g in aut.generators:
            img = frozenset((g[a], g[b]))
            if img == target:
                return True
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return False
