"""Exact completeness checks for a family of class representatives.

The mass formula sums ``n!/|Aut(C)|`` over one code per class and must hit
the number of distinct self-dual codes of length ``n``. The weighted form
counts pairs (code, word of weight ``d``), each even vector of weight ``d``
lying in the same number of self-dual codes. Everything is Python ``int``
arithmetic; nothing here touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Iterable, Protocol, Sequence

from .errors import NonDivisor, OddLength


class _Record(Protocol):
    n: int
    aut_order: int

    def weight_count(self, w: int) -> int: ...


@dataclass(frozen=True)
class CheckResult:
    n: int
    check: str
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{self.n} {self.check} {self.lhs} {self.rhs} {verdict}"


def _check_length(n: int) -> None:
    if n % 2:
        raise OddLength(f"length {n} is odd")
    if n < 2:
        raise ValueError(f"length {n} is below 2")


def _product(top: int) -> int:
    out = 1
    for i in range(1, top + 1):
        out *= (1 << i) + 1
    return out


def total_count(n: int) -> int:
    """Number of distinct self-dual codes of length ``n``."""
    _check_length(n)
    return _product(n // 2 - 1)


def thompson_rhs(n: int, d: int) -> int:
    """Self-dual codes through one word of weight ``d``, times the number of such words."""
    _check_length(n)
    if d % 2 or d < 2:
        raise ValueError(f"weight {d} must be even and positive")
    return comb(n, d) * _product(n // 2 - 2)


def class_size(n: int, aut_order: int) -> int:
    """Codes equivalent to one with an automorphism group of the given order."""
    q, r = divmod(factorial(n), aut_order)
    if r or aut_order <= 0:
        raise NonDivisor(f"|Aut| = {aut_order} does not divide {n}!")
    return q


def _order_and_count(item, n: int, d: int | None) -> tuple[int, int]:
    # accepts database records, search nodes or (order, weight distribution) pairs
    if isinstance(item, tuple):
        order, dist = item
        count = dist[d] if d is not None and d < len(dist) else 0
        return int(order), int(count)
    if hasattr(item, "aut_order"):
        return int(item.aut_order), (item.weight_count(d) if d is not None else 0)
    dist = item.code.weight_distribution
    return int(item.aut.order), (int(dist[d]) if d is not None else 0)


def mass_check(family: Iterable, n: int) -> CheckResult:
    """``sum n!/|Aut|`` against :func:`total_count`."""
    lhs = 0
    for item in family:
        order, _ = _order_and_count(item, n, None)
        lhs += class_size(n, order)
    return CheckResult(n, "mass", lhs, total_count(n))


def thompson_check(family: Iterable, n: int, d: int) -> CheckResult:
    """``sum n!/|Aut| * A_d`` against :func:`thompson_rhs`.

    Codes of minimum weight above ``d`` contribute nothing, so passing the
    whole family or only its members with minimum weight at most ``d`` is
    the same.
    """
    lhs = 0
    for item in family:
        order, count = _order_and_count(item, n, d)
        if count:
            lhs += class_size(n, order) * count
    return CheckResult(n, f"thompson_d{d}", lhs, thompson_rhs(n, d))


def full_report(family: Sequence, n: int, d_max: int | None = None) -> list[CheckResult]:
    """Mass check plus a weighted check for every even ``d`` up to ``d_max``.

    ``d_max`` defaults to the largest minimum weight in the family.
    """
    if d_max is None:
        d_max = max((_min_weight(item) for item in family), default=2)
    out = [mass_check(family, n)]
    for d in range(2, d_max + 1, 2):
        out.append(thompson_check(family, n, d))
    return out


def _min_weight(item) -> int:
    if isinstance(item, tuple):
        dist = item[1]
        return next(w for w in range(1, len(dist)) if dist[w])
    if hasattr(item, "d"):
        return int(item.d)
    return item.code.min_weight


__all__ = [
    "CheckResult",
    "class_size",
    "full_report",
    "mass_check",
    "thompson_check",
    "thompson_rhs",
    "total_count",
]
