from __future__ import annotations

from math import factorial

import pytest

from sdclass.db import from_nodes
from sdclass.stats import (
    a_k_floor,
    by_min_weight,
    divisibility,
    prime_factors,
    report,
    trivial_count,
    type_counts,
)

# floor(a_k) for k = 1..16
A_K = [2, 8, 48, 597, 3162, 18974, 70836, 230631, 353061, 464937,
       327440, 194067, 57659, 13482, 2004, 273]
COUNTS = [1, 1, 1, 2, 2, 3, 4, 7, 9, 16, 25, 55, 103, 261, 731, 3295]


@pytest.mark.parametrize("k", range(1, 17))
def test_a_k_from_class_counts(k):
    assert a_k_floor(COUNTS[k - 1], k) == A_K[k - 1]


def test_a_k_is_a_floor():
    # 2 * 8! / 135 = 597.33..
    assert a_k_floor(2, 4) == 2 * factorial(8) // 135 == 597


def test_prime_factors():
    assert prime_factors(1344) == {2: 6, 3: 1, 7: 1}
    assert prime_factors(1) == {}
    assert prime_factors(97) == {97: 1}


def test_divisibility_table():
    table = divisibility([1344, 384])
    # 384 = 2^7 * 3, 1344 = 2^6 * 3 * 7
    assert table[2] == [2, 2, 2, 2, 2, 2, 1]
    assert table[3] == [2]
    assert table[7] == [1]


def test_per_weight_rows(levels):
    db = from_nodes(16, levels[16])
    rows = by_min_weight(db.records)
    assert [(r.d, r.count) for r in rows] == [(2, 4), (4, 3)]
    assert sum(r.count for r in rows) == 7
    assert all(r.min_order <= r.max_order for r in rows)
    assert type_counts(db.records) == {"I": 5, "II": 2}
    assert trivial_count(db.records) == 0


def test_report_lines(levels):
    lines = report(from_nodes(16, levels[16]))
    assert lines[0] == "n=16 k=8 classes=7 typeII=2"
    assert "a_8 230631" in lines
    assert lines[-1] == "trivial_aut 0"
