from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sdclass.errors import DimensionMismatch, RankDeficient
from sdclass.gf2 import (
    BitMatrix,
    BitVector,
    format_bits,
    is_self_orthogonal,
    mat_mul,
    mat_vec,
    parse_bits,
    permute_columns,
    rank,
    rank_of_words,
    rref,
    systematic_form,
)


def slow_rank(rows: list[list[int]]) -> int:
    # plain Gaussian elimination on lists, no bit tricks
    m = [r[:] for r in rows]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                m[i] = [a ^ b for a, b in zip(m[i], m[r])]
        r += 1
    return r


matrices = st.integers(1, 12).flatmap(
    lambda cols: st.lists(st.lists(st.integers(0, 1), min_size=cols, max_size=cols),
                          min_size=1, max_size=10))


def test_bitvector_basics():
    v = BitVector.from_str("10110")
    assert v.weight() == 3
    assert list(v) == [1, 0, 1, 1, 0]
    assert str(v) == "10110"
    assert v[0] == 1 and v[4] == 0
    assert v.dot(BitVector.from_str("10000")) == 1
    assert (v ^ v).weight() == 0
    with pytest.raises(DimensionMismatch):
        v.dot(BitVector.from_str("1"))
    with pytest.raises(ValueError):
        BitVector(3, 0b1000)


def test_bit_strings_round_trip():
    assert parse_bits("0101") == 5
    assert format_bits(5, 6) == "000101"
    with pytest.raises(ValueError):
        parse_bits("012")


def test_column_order_matches_integer_order():
    a = BitMatrix.from_strings(["1000", "0111"])
    assert a.row_ints() == [8, 7]
    assert a.column(0).bits == 0b10
    assert a.transpose().to_strings() == ["10", "01", "01", "01"]
    assert a.submatrix([3, 0]).to_strings() == ["01", "10"]


def test_rref_known_case():
    m = BitMatrix.from_strings(["1111", "1010"])
    r, piv = rref(m)
    assert piv == [0, 1]
    assert r.to_strings() == ["1010", "0101"]


def test_rank_deficient_rows_dropped():
    m = BitMatrix.from_strings(["110", "011", "101"])
    assert rank(m) == 2
    with pytest.raises(RankDeficient):
        systematic_form(m)


def test_systematic_form_of_first_child():
    # the length-4 child of i2 already has its pivots in front
    g = BitMatrix.from_strings(["1010", "1111"])
    s, perm = systematic_form(g)
    assert s.to_strings() == ["1010", "0101"]
    assert list(perm) == [0, 1, 2, 3]


def test_systematic_form_moves_pivots_forward():
    g = BitMatrix.from_strings(["0110", "0011"])
    s, perm = systematic_form(g)
    assert s.to_strings()[0].startswith("10") and s.to_strings()[1].startswith("01")
    assert list(perm) == [2, 0, 1, 3]
    assert permute_columns(rref(g)[0], perm) == s


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_rank_matches_slow_elimination(rows):
    m = BitMatrix.from_lists(rows)
    assert rank(m) == slow_rank(rows)
    assert rank_of_words(m.row_ints(), m.cols) == slow_rank(rows)


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_rref_is_reduced_and_same_row_space(rows):
    m = BitMatrix.from_lists(rows)
    r, piv = rref(m)
    arr = r.to_array()
    for i, c in enumerate(piv):
        assert arr[:, c].tolist() == [int(j == i) for j in range(r.rows)]
    assert rank(BitMatrix(list(r.row_ints()) + m.row_ints(), m.cols)) == r.rows


@settings(max_examples=100, deadline=None)
@given(matrices, st.randoms(use_true_random=False))
def test_permute_columns_matches_array_indexing(rows, rnd):
    m = BitMatrix.from_lists(rows)
    perm = list(range(m.cols))
    rnd.shuffle(perm)
    moved = permute_columns(m, perm).to_array()
    expect = np.zeros_like(moved)
    expect[:, perm] = m.to_array()
    assert np.array_equal(moved, expect)


@settings(max_examples=100, deadline=None)
@given(matrices, st.randoms(use_true_random=False))
def test_mat_mul_matches_numpy(rows, rnd):
    b = BitMatrix.from_lists(rows)
    a = BitMatrix.from_lists([[rnd.randint(0, 1) for _ in range(b.rows)] for _ in range(3)])
    expect = (a.to_array().astype(int) @ b.to_array().astype(int)) % 2
    assert np.array_equal(mat_mul(a, b).to_array(), expect)
    x = BitVector.from_list([rnd.randint(0, 1) for _ in range(b.cols)])
    expect_v = (b.to_array().astype(int) @ np.array(list(x))) % 2
    assert list(mat_vec(b, x)) == expect_v.tolist()


def test_self_orthogonality():
    assert is_self_orthogonal(BitMatrix.from_strings(["1111", "1100"]))
    assert not is_self_orthogonal(BitMatrix.from_strings(["1110"]))


def test_matrix_value_semantics():
    a = BitMatrix.from_strings(["10", "01"])
    assert a == BitMatrix.identity(2)
    assert hash(a) == hash(BitMatrix.identity(2))
    assert BitMatrix.zeros(2, 3).to_strings() == ["000", "000"]
    with pytest.raises(ValueError):
        BitMatrix([0b100], 2)
