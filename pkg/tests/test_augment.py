from __future__ import annotations

import random

import numpy as np
import pytest

from oracles import classify, span_set
from sdclass.augment import (
    FastVerdict,
    SearchStats,
    _vector_images,
    aut_to_gl,
    augment,
    children,
    extend,
    extension_orbits,
    make_node,
    parent,
    parent_test_fast,
    parent_test_full,
    partition_run,
    split_round_robin,
)
from sdclass.canonical import canonical_form, canonical_outcome, pseudo_orbits
from sdclass.code import SelfDualCode, direct_sum
from sdclass.errors import EqualLastColumns, EvenWeightVector, NotAutomorphism
from sdclass.gf2 import BitMatrix, BitVector, mat_mul, permute_columns
from sdclass.groups import compose
from sdclass.kernels import orbit_labels


def words_of(code):
    return frozenset(int(w) for w in code.words)


def test_extend_i2():
    child = extend(SelfDualCode.i2(), 1)
    assert child == SelfDualCode.from_generator(["1010", "1111"])
    with pytest.raises(EvenWeightVector):
        extend(make_node(direct_sum(SelfDualCode.i2(), SelfDualCode.i2())).code, 0b11)


def test_parent_of_length_4_code():
    c = SelfDualCode.from_generator(["1010", "1111"])
    assert parent(c) == SelfDualCode.i2()
    with pytest.raises(EqualLastColumns):
        parent(SelfDualCode.from_generator(["1100", "0011"]))


def test_children_contain_all_ones(levels):
    for n in range(2, 15, 2):
        for node in levels[n]:
            for x in extension_orbits(node.code, node.aut).reps:
                child = extend(node.code, x)
                assert child.contains((1 << child.n) - 1)


def test_aut_to_gl_identity_and_swap():
    c = make_node(direct_sum(SelfDualCode.i2(), SelfDualCode.i2())).code
    n = c.n
    assert aut_to_gl(tuple(range(n)), c.gen) == BitMatrix.identity(2)
    # find the block swap among the group elements
    cols = c.columns()
    blocks = sorted({tuple(i for i in range(n) if cols[i] == v) for v in set(cols)})
    swap = list(range(n))
    for a, b in zip(blocks[0], blocks[1]):
        swap[a], swap[b] = b, a
    assert aut_to_gl(swap, c.gen) == BitMatrix.from_strings(["01", "10"])
    with pytest.raises(NotAutomorphism):
        aut_to_gl((1, 2, 0, 3), c.gen)


def test_aut_to_gl_composition(levels):
    rnd = random.Random(5)
    for node in levels[16]:
        gens = node.aut.generators
        for _ in range(5):
            p, q = rnd.choice(gens), rnd.choice(gens)
            ap, aq = aut_to_gl(p, node.code.gen), aut_to_gl(q, node.code.gen)
            # P applied first, then Q
            assert aut_to_gl(compose(q, p), node.code.gen) == mat_mul(ap, aq)
            assert mat_mul(ap, node.code.gen) == permute_columns(node.code.gen, p)


def test_extension_orbits_partition_odd_vectors(levels):
    for n in (8, 12, 16):
        for node in levels[n]:
            orb = extension_orbits(node.code, node.aut)
            m = node.code.k
            assert all(bin(r).count("1") % 2 == 1 for r in orb.reps)
            assert sum(orb.sizes) == 2 ** (m - 1)
            assert orb.reps == sorted(orb.reps)


def test_trivial_group_gives_all_odd_vectors():
    node = make_node(SelfDualCode.from_generator(["10001110", "01001011", "00101101", "00010111"]))
    node.aut.generators = []
    assert len(extension_orbits(node.code, node.aut).reps) == 8


def _vector_orbit_labels(node):
    images = [_vector_images(aut_to_gl(g, node.code.gen)) for g in node.aut.generators]
    size = 1 << node.code.k
    return orbit_labels(np.stack(images)) if images else np.arange(size)


def test_orbit_equivalence_against_oracle():
    # two children are equivalent exactly when their vectors share an orbit
    levels = {2: [make_node(SelfDualCode.i2())]}
    for k in range(2, 5):
        levels[2 * k] = augment(levels[2 * k - 2], k)
    for n in (2, 4, 6, 8):
        class_of, _ = classify(n + 2)
        for node in levels[n]:
            labels = _vector_orbit_labels(node)
            odd = [x for x in range(1 << node.code.k) if bin(x).count("1") % 2]
            for a in odd:
                for b in odd:
                    same_orbit = labels[a] == labels[b]
                    ca = class_of[words_of(extend(node.code, a))]
                    cb = class_of[words_of(extend(node.code, b))]
                    assert same_orbit == (ca == cb), (n, a, b)


def test_the_alternative_last_pair_is_equivalent(levels):
    for node in levels[12]:
        for x in extension_orbits(node.code, node.aut).reps:
            child = extend(node.code, x)
            rows = child.gen.row_ints()
            flipped = SelfDualCode(BitMatrix([r ^ 0b11 if r & 0b11 in (1, 2) and i == 0 else r
                                              for i, r in enumerate(_top_first(node.code, x))],
                                             child.n))
            assert canonical_form(flipped) == canonical_form(child)


def _top_first(c1, x):
    m = c1.k
    n = c1.n + 2
    rows = [(x << (n - m)) | 0b10]
    for i, r in enumerate(c1.gen.row_ints()):
        bit = (x >> (m - 1 - i)) & 1
        rows.append((r << 2) | (0b11 if bit else 0))
    return rows


def test_one_accepted_child_per_class_small():
    nodes = [make_node(SelfDualCode.i2())]
    for k in range(2, 6):
        n = 2 * k
        class_of, orders = classify(n)
        nodes = augment(nodes, k)
        ids = [class_of[words_of(node.code)] for node in nodes]
        assert sorted(ids) == sorted(orders)
        assert sorted(node.aut.order for node in nodes) == sorted(orders.values())


def test_round_trip_parent_extend(levels):
    for n in range(2, 15, 2):
        for node in levels[n]:
            target = canonical_form(node.code)
            for x in extension_orbits(node.code, node.aut).reps:
                child = extend(node.code, x)
                assert canonical_form(parent(child)) == target
                assert parent(child).min_weight >= child.min_weight - 2 or parent(child).k == 0


def test_fast_filter_soundness(levels):
    checked = rejected = 0
    for n in range(2, 15, 2):
        for node in levels[n]:
            for x in extension_orbits(node.code, node.aut).reps:
                child = extend(node.code, x)
                verdict = parent_test_fast(child)
                passed, _ = parent_test_full(child)
                checked += 1
                if verdict is FastVerdict.REJECT:
                    rejected += 1
                    assert not passed
    assert checked > 30 and rejected > 0


def test_canonical_representative_passes(levels):
    for node in levels[16]:
        out = canonical_outcome(node.code)
        passed, _ = parent_test_full(out.canon)
        assert passed


def test_equivalent_passing_codes_have_equivalent_parents(levels):
    rnd = random.Random(11)
    for node in levels[14]:
        for child in children(node):
            code = child.code
            n = code.n
            perm = list(range(n - 2))
            rnd.shuffle(perm)
            perm += [n - 1, n - 2] if rnd.random() < 0.5 else [n - 2, n - 1]
            moved = code.permute(perm)
            assert parent_test_full(moved)[0]
            assert canonical_form(parent(moved)) == canonical_form(parent(code))


def test_augment_counts():
    root = [make_node(SelfDualCode.i2())]
    assert len(augment(root, 4)) == 2
    stats = SearchStats()
    out = augment(root, 10, stats=stats)
    assert len(out) == 16
    assert stats.accepted >= 16 and stats.children >= stats.canonical + stats.fast_rejects - 0


def test_d2_count_equals_previous_total(levels):
    for n in range(4, 17, 2):
        assert sum(node.code.min_weight == 2 for node in levels[n]) == len(levels[n - 2])


def test_roots_from_a_stored_level(levels):
    again = augment([node.code for node in levels[10]], 7)
    assert {node.code for node in again} == {node.code for node in levels[14]}


def test_split_round_robin():
    assert split_round_robin(list(range(7)), 3) == [[0, 3, 6], [1, 4], [2, 5]]
    with pytest.raises(ValueError):
        split_round_robin([1], 0)


@pytest.mark.parametrize("parts", [1, 2, 4])
def test_partition_run_matches_serial(levels, parts):
    serial = {node.code for node in levels[16]}
    merged = partition_run(levels[12], parts, 8)
    assert len(merged) == len(serial)
    assert {node.code for node in merged} == serial
