import itertools
import random

import pytest

from asmlat import (
    Ordering,
    Permutation,
    beta_corner,
    beta_poset_oracle,
    classify_cover_type,
    compare,
    covers_down,
    covers_up,
    dual,
    enumerate_bigrassmannians,
    from_permutation,
    identity,
    is_bigrassmannian,
    is_join_irreducible,
    join,
    meet,
    rank_by_chain,
    to_permutation,
    transpose,
    try_cover,
)
from asmlat.core import SizeMismatch
from asmlat.poset import COVER_TYPES, NotAnExchangeBlock, bigrassmannians_below, leq


def perm(*images):
    return from_permutation(Permutation.from_images(list(images)))


def test_compare_bottom(pools):
    for a in pools[4]:
        assert compare(identity(4), a) in (Ordering.LESS, Ordering.EQUAL)


def test_compare_example_pair(example_a, example_b):
    assert compare(example_a, example_b) is Ordering.LESS
    assert compare(example_b, example_a) is Ordering.GREATER
    assert compare(example_a, example_a) is Ordering.EQUAL


def test_compare_incomparable():
    assert compare(perm(1, 3, 4, 2), perm(1, 4, 2, 3)) is Ordering.INCOMPARABLE


def test_compare_size_mismatch():
    with pytest.raises(SizeMismatch):
        compare(identity(3), identity(4))


def test_try_cover_golden(example_a, example_b):
    e = try_cover(example_a, example_b)
    assert e is not None
    assert (e.r, e.s, e.cover_type) == (2, 2, 4)
    assert (e.d_inv, e.d_minus, e.d_weak2) == (-1, -2, 0)
    assert e.to_json_dict() == {
        "r": 2, "s": 2, "type": 4, "dI": -1, "dN2x": -2, "dH2x": 0,
    }


def test_try_cover_simplest():
    e = try_cover(identity(2), perm(2, 1))
    assert (e.r, e.s, e.cover_type) == (1, 1, 1)


def test_try_cover_rejects_rank_gap():
    assert try_cover(identity(3), perm(3, 2, 1)) is None
    assert try_cover(perm(2, 1, 3), identity(3)) is None  # wrong direction


def test_covers_up_identity3():
    edges = covers_up(identity(3))
    assert len(edges) == 2
    uppers = {to_permutation(e.upper).images for e in edges}
    assert uppers == {(1, 3, 2), (2, 1, 3)}


def test_covers_up_top():
    assert covers_up(from_permutation(Permutation.longest(4))) == []


def test_covers_middle3(middle3):
    up = covers_up(middle3)
    assert {to_permutation(e.upper).images for e in up} == {(2, 3, 1), (3, 1, 2)}
    down = covers_down(middle3)
    assert {to_permutation(e.lower).images for e in down} == {(1, 3, 2), (2, 1, 3)}


def test_covers_down_example(example_a, example_b):
    assert covers_down(identity(5)) == []
    lowers = [e.lower for e in covers_down(example_b)]
    assert example_a in lowers


def test_classify_cover_type_goldens():
    t1 = classify_cover_type([[1, 0], [0, 1]], [[0, 1], [1, 0]])
    assert (t1.index, t1.d_inv, t1.d_weak2) == (1, 1, 2)
    t4 = classify_cover_type([[1, -1], [-1, 1]], [[0, 0], [0, 0]])
    assert (t4.index, t4.d_inv, t4.d_weak2) == (4, -1, 0)
    t16 = classify_cover_type([[0, -1], [-1, 0]], [[-1, 0], [0, -1]])
    assert (t16.index, t16.d_inv, t16.d_weak2) == (16, -1, -2)


def test_classify_cover_type_rejects():
    with pytest.raises(NotAnExchangeBlock):
        classify_cover_type([[1, 0], [0, 1]], [[1, 0], [0, 1]])
    with pytest.raises(NotAnExchangeBlock):
        classify_cover_type([[2, 0], [0, 2]], [[1, 1], [1, 1]])


def test_cover_table_consistency():
    # within each table row: 2*dI - dN = 2*dH, the deltas stay in range,
    # and the starred involution is an involution
    by_index = {t.index: t for t in COVER_TYPES}
    assert sorted(by_index) == list(range(1, 17))
    for t in COVER_TYPES:
        assert 2 * t.d_inv - t.d_minus == t.d_weak2
        assert t.d_inv in (-1, 0, 1)
        assert t.d_weak2 in (-2, -1, 0, 1, 2)
        assert by_index[t.star].star == t.index


def test_join_meet_examples(middle3):
    a, b = perm(1, 3, 2), perm(2, 1, 3)
    assert join(a, b) == middle3
    assert meet(middle3, middle3) == middle3
    for x in (a, b, middle3):
        assert join(identity(3), x) == x
        assert meet(identity(3), x) == identity(3)


def test_join_meet_are_bounds(pools):
    rng = random.Random(7)
    universe = pools[4]
    for _ in range(300):
        a, b = rng.choice(universe), rng.choice(universe)
        j, m = join(a, b), meet(a, b)
        assert leq(a, j) and leq(b, j)
        assert leq(m, a) and leq(m, b)
        # least/greatest among the bounds
        for c in (rng.choice(universe) for _ in range(10)):
            if leq(a, c) and leq(b, c):
                assert leq(j, c)
            if leq(c, a) and leq(c, b):
                assert leq(c, m)


def test_lattice_laws_exhaustive_n3(pools):
    for a, b, c in itertools.product(pools[3], repeat=3):
        assert join(a, b) == join(b, a)
        assert meet(a, join(a, b)) == a
        assert join(a, meet(a, b)) == a
        assert meet(a, join(b, c)) == join(meet(a, b), meet(a, c))


def test_is_bigrassmannian():
    assert is_bigrassmannian(Permutation.from_images([3, 4, 1, 2]))
    assert not is_bigrassmannian(Permutation.identity(4))
    assert not is_bigrassmannian(Permutation.from_images([3, 2, 1]))


def test_enumerate_bigrassmannians():
    assert len(enumerate_bigrassmannians(3)) == 4
    assert len(enumerate_bigrassmannians(4)) == 10
    assert enumerate_bigrassmannians(1) == []


def test_beta_poset_oracle(example_a, example_b):
    assert beta_poset_oracle(example_a) == 7
    assert {str(w) for w in bigrassmannians_below(example_a)} == {
        "1342", "1423", "3124", "2314", "1243", "1324", "2134",
    }
    assert beta_poset_oracle(example_b) == 8
    assert beta_poset_oracle(identity(4)) == 0


def test_beta_oracle_agrees_with_formula(pools):
    for n in (1, 2, 3, 4):
        for a in pools[n]:
            assert beta_poset_oracle(a) == beta_corner(a)


def test_is_join_irreducible(middle3, pools):
    assert not is_join_irreducible(middle3)
    assert is_join_irreducible(perm(1, 3, 2))
    assert sum(1 for a in pools[4] if is_join_irreducible(a)) == 10


def test_join_irreducibles_are_bigrassmannians(pools):
    for n in (2, 3, 4, 5):
        ji = {a for a in pools[n] if is_join_irreducible(a)}
        bg = {from_permutation(w) for w in enumerate_bigrassmannians(n)}
        assert ji == bg


def test_rank_by_chain(example_a):
    assert rank_by_chain(identity(5)) == 0
    assert rank_by_chain(example_a) == 7
    assert rank_by_chain(from_permutation(Permutation.longest(4))) == 10


def test_rank_by_chain_matches_beta(pools):
    for a in pools[4]:
        assert rank_by_chain(a) == beta_corner(a)


def test_transpose_is_order_isomorphism(pools):
    for a, b in itertools.combinations(pools[3], 2):
        assert compare(a, b) == compare(transpose(a), transpose(b))


def test_dual_reverses_order(pools):
    for a, b in itertools.combinations(pools[3], 2):
        assert (compare(a, b) is Ordering.LESS) == (
            compare(dual(b), dual(a)) is Ordering.LESS
        )


def test_cover_duality_types(pools):
    by_index = {t.index: t for t in COVER_TYPES}
    for a in pools[3] + pools[4]:
        for e in covers_up(a):
            mirror = try_cover(dual(e.upper), dual(e.lower))
            assert mirror is not None
            assert mirror.cover_type == by_index[e.cover_type].star
            assert mirror.d_weak2 == e.d_weak2
