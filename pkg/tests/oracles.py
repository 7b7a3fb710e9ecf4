"""Independent brute-force references used by the tests.

Nothing here imports the package's search code: codes are frozensets of
Python ints (coordinate ``i`` is bit ``n - 1 - i``) and every answer comes
from exhaustive enumeration.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from math import factorial


def span_set(rows) -> frozenset[int]:
    words = {0}
    for r in rows:
        words |= {w ^ r for w in words}
    return frozenset(words)


def permute_word(w: int, perm, n: int) -> int:
    out = 0
    for i in range(n):
        if (w >> (n - 1 - i)) & 1:
            out |= 1 << (n - 1 - perm[i])
    return out


def permute_code(code: frozenset[int], perm, n: int) -> frozenset[int]:
    return frozenset(permute_word(w, perm, n) for w in code)


def _orthogonal(a: int, b: int) -> bool:
    return bin(a & b).count("1") % 2 == 0


@lru_cache(maxsize=None)
def all_self_dual(n: int) -> tuple[frozenset[int], ...]:
    """Every self-dual code of length ``n`` by growing self-orthogonal codes.

    Every self-dual code holds the all-ones word, so growth starts there;
    a candidate only has to be orthogonal to the generators picked so far.
    """
    ones = (1 << n) - 1
    even = [v for v in range(1, ones) if bin(v).count("1") % 2 == 0]
    level = {span_set([ones]): (ones,)}
    for _ in range(n // 2 - 1):
        nxt: dict[frozenset[int], tuple[int, ...]] = {}
        for code, rows in level.items():
            for v in even:
                if v in code or not all(_orthogonal(v, r) for r in rows):
                    continue
                grown = code | frozenset(w ^ v for w in code)
                if grown not in nxt:
                    nxt[grown] = rows + (v,)
        level = nxt
    return tuple(sorted(level, key=sorted))


@lru_cache(maxsize=None)
def classify(n: int) -> tuple[dict[frozenset[int], int], dict[int, int]]:
    """Class id per code and ``|Aut|`` per class id, via orbits of ``S_n``.

    ``S_n`` is generated by a transposition and an ``n``-cycle, so union-find
    over those two moves yields the equivalence classes; the orbit-stabiliser
    theorem gives the group orders.
    """
    codes = all_self_dual(n)
    index = {c: i for i, c in enumerate(codes)}
    parent = list(range(len(codes)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    swap = [1, 0] + list(range(2, n))
    cycle = [(i + 1) % n for i in range(n)]
    for c, i in index.items():
        for g in (swap, cycle):
            j = index[permute_code(c, g, n)]
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    roots = sorted({find(i) for i in range(len(codes))})
    class_of = {c: roots.index(find(i)) for c, i in index.items()}
    sizes: dict[int, int] = {}
    for cid in class_of.values():
        sizes[cid] = sizes.get(cid, 0) + 1
    orders = {cid: factorial(n) // size for cid, size in sizes.items()}
    return class_of, orders


def aut_order_by_permutations(code: frozenset[int], n: int) -> int:
    """``|Aut|`` by testing all ``n!`` permutations; fine up to ``n = 8``."""
    return sum(1 for p in permutations(range(n)) if permute_code(code, p, n) == code)


def min_weight(code) -> int:
    return min(bin(w).count("1") for w in code if w)


def weight_count(code, w: int) -> int:
    return sum(1 for x in code if bin(x).count("1") == w)


def product_count(n: int) -> int:
    """Number of self-dual codes of length ``n`` as a plain loop."""
    out = 1
    for i in range(1, n // 2):
        out *= 2 ** i + 1
    return out


def binomial(n: int, r: int) -> int:
    num = den = 1
    for i in range(r):
        num *= n - i
        den *= i + 1
    return num // den
