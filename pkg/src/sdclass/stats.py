"""Summary statistics over one length's class representatives."""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Sequence

from .db import ClassDatabase, ClassRecord
from .verify import total_count


@dataclass(frozen=True)
class WeightRow:
    d: int
    count: int
    enumerators: int
    orders: int
    min_order: int
    max_order: int


def a_k_floor(count: int, k: int) -> int:
    """``floor(count * (2k)! / prod_{i<k} (2^i + 1))``: average class size ratio."""
    return count * factorial(2 * k) // total_count(2 * k)


def prime_factors(m: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def by_min_weight(records: Sequence[ClassRecord],
                  enumerators: dict[int, tuple[int, ...]] | None = None) -> list[WeightRow]:
    """Per minimum weight: counts of classes, weight enumerators and group orders.

    ``enumerators`` maps record index to full weight distribution; it is
    computed from the generator rows when not given.
    """
    groups: dict[int, list[int]] = defaultdict(list)
    for idx, rec in enumerate(records):
        groups[rec.d].append(idx)
    out = []
    for d in sorted(groups):
        idxs = groups[d]
        orders = [records[i].aut_order for i in idxs]
        if enumerators is None:
            enums = {records[i].code().weight_distribution for i in idxs}
        else:
            enums = {enumerators[i] for i in idxs}
        out.append(WeightRow(d, len(idxs), len(enums), len(set(orders)), min(orders), max(orders)))
    return out


def divisibility(orders: Iterable[int]) -> dict[int, list[int]]:
    """For each prime ``p`` dividing some order, entry ``e - 1`` counts orders divisible by ``p^e``."""
    exps: list[dict[int, int]] = [prime_factors(o) for o in orders]
    primes = sorted({p for f in exps for p in f})
    table = {}
    for p in primes:
        top = max(f.get(p, 0) for f in exps)
        table[p] = [sum(1 for f in exps if f.get(p, 0) >= e) for e in range(1, top + 1)]
    return table


def trivial_count(records: Iterable[ClassRecord]) -> int:
    return sum(1 for r in records if r.aut_order == 1)


def report(db: ClassDatabase) -> list[str]:
    """Plain text lines: one block per statistic, numbers in decimal."""
    recs = db.records
    n, k = db.n, db.k
    lines = [f"n={n} k={k} classes={len(recs)} typeII={sum(_doubly_even(r) for r in recs)}"]
    lines.append("d count enumerators distinct_aut min_aut max_aut")
    for row in by_min_weight(recs):
        lines.append(f"{row.d} {row.count} {row.enumerators} {row.orders} "
                     f"{row.min_order} {row.max_order}")
    lines.append("p^e classes")
    for p, counts in divisibility(r.aut_order for r in recs).items():
        for e, c in enumerate(counts, start=1):
            lines.append(f"{p}^{e} {c}")
    lines.append(f"a_{k} {a_k_floor(len(recs), k)}")
    lines.append(f"trivial_aut {trivial_count(recs)}")
    return lines


def _doubly_even(rec: ClassRecord) -> bool:
    # a self-dual code is doubly even iff its generator rows are
    return all(row.count("1") % 4 == 0 for row in rec.rows)


def type_counts(records: Iterable[ClassRecord]) -> Counter:
    return Counter("II" if _doubly_even(r) else "I" for r in records)


__all__ = [
    "WeightRow",
    "a_k_floor",
    "by_min_weight",
    "divisibility",
    "prime_factors",
    "report",
    "trivial_count",
    "type_counts",
]
