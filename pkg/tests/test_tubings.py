from math import comb, factorial

import pytest
from hypothesis import given

from conftest import plane_trees
from tubings_dse.mellin import MellinTable
from tubings_dse.rings import Poly
from tubings_dse.trees import Decoration, corolla, decreasing_labellings, enumerate_trees, ladder, parse_tree
from tubings_dse.tubings import (Leaf, Split, b_statistic, containment_tree, count_tubings,
                                 enumerate_tubings, is_leaf_tubing, is_valid_tubing, mellin_monomial,
                                 mellin_monomial_recursive, tubing_from_json)


def catalan(n):
    return comb(2 * n, n) // (n + 1)


c = lambda i: Poly.symbol(f"c[{i},1]")


def test_small_tree_counts():
    assert len(enumerate_tubings(ladder(3))) == 2
    assert len(enumerate_tubings(ladder(4))) == 5
    assert len(enumerate_tubings(corolla(4))) == 6
    assert count_tubings(parse_tree("1(1,1,1(1))")) == 18


def test_ladders_and_corollas():
    assert [count_tubings(ladder(n + 1)) for n in range(13)] == [catalan(n) for n in range(13)]
    assert [count_tubings(corolla(n + 1)) for n in range(10)] == [factorial(n) for n in range(10)]


def test_mellin_monomial_examples(sym5):
    (single,) = enumerate_tubings(ladder(1))
    assert mellin_monomial(single, sym5) == 1
    (l2,) = enumerate_tubings(ladder(2))
    assert mellin_monomial(l2, sym5) == c(0)
    monos = {str(mellin_monomial(t, sym5)) for t in enumerate_tubings(ladder(3))}
    assert monos == {str(c(1) * c(0)), str(c(0) * c(0))}


def test_b_statistic_root_and_range():
    for tub in enumerate_tubings(parse_tree("1(1,1(1))")):
        assert b_statistic(tub, 0) == tub.b
        with pytest.raises(ValueError):
            b_statistic(tub, 9)


def test_containment_trees_of_ladder_5_are_all_shapes():
    shapes = [containment_tree(t).shape() for t in enumerate_tubings(ladder(5))]
    assert len(shapes) == len(set(shapes)) == 14
    assert all(containment_tree(t).leaves() == 5 for t in enumerate_tubings(ladder(5)))


def test_leaf_tubings_small():
    assert sum(is_leaf_tubing(t) for t in enumerate_tubings(ladder(3))) == 1
    assert all(is_leaf_tubing(t) for t in enumerate_tubings(corolla(4)))


def test_leaf_tubings_count_decreasing_labellings():
    for n in range(1, 8):
        for t in enumerate_trees(n, [Decoration(1)]):
            leaf = sum(is_leaf_tubing(x) for x in enumerate_tubings(t))
            assert leaf == decreasing_labellings(t)


def test_json_round_trip_and_validation():
    t = parse_tree("1(1,1(1))")
    for tub in enumerate_tubings(t):
        assert tubing_from_json(t, tub.to_json()).node == tub.node
    with pytest.raises(ValueError):
        tubing_from_json(t, {"edge": 0, "lower": {"leaf": 0}, "upper": {"leaf": 1}})
    assert not is_valid_tubing(t, Split(2, Leaf(1), Leaf(0)))


@given(plane_trees(max_size=7))
def test_tubing_invariants(t):
    tubs = enumerate_tubings(t)
    n = t.size
    assert len(tubs) == count_tubings(t)
    assert catalan(n - 1) <= len(tubs) <= factorial(n - 1)
    for tub in tubs:
        assert len(tub.tubes) == 2 * n - 1
        assert sum(tub.b_values) == 2 * n - 1
        assert 1 <= tub.b <= n
        assert is_valid_tubing(t, tub.node)
    assert len({x.node for x in tubs}) == len(tubs)


@given(plane_trees(max_size=6, weights=(1, 2)))
def test_mellin_monomial_two_ways(t):
    table = MellinTable.symbolic(7, [Decoration(1), Decoration(2)])
    for tub in enumerate_tubings(t):
        assert mellin_monomial(tub, table) == mellin_monomial_recursive(tub, table)


@given(plane_trees(max_size=6))
def test_sub_tubings_are_tubings(t):
    for tub in enumerate_tubings(t):
        if tub.n > 1:
            low, up = tub.lower(), tub.upper()
            assert low.n + up.n == tub.n
            assert is_valid_tubing(low.host, low.node) and is_valid_tubing(up.host, up.node)


@given(plane_trees(max_size=7))
def test_count_ignores_the_root(t):
    from tubings_dse.trees import rerootings

    assert {count_tubings(r) for r in rerootings(t)} == {count_tubings(t)}
