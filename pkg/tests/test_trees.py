import json
from math import comb

import pytest
from hypothesis import given

from conftest import plane_trees
from tubings_dse.trees import (Decoration, PlaneTree, RootedTree, TreeSyntaxError, aut_order,
                               canonicalize, corolla, decreasing_labellings, edge_split,
                               enumerate_trees, ladder, parse_tree, plane_embeddings,
                               plane_orderings)

ONE = [Decoration(1)]


def test_parse_examples():
    t = parse_tree("1")
    assert t.size == 1 and t.decoration.weight == 1
    cherry = parse_tree("1(1,1)")
    assert cherry.size == 3 and len(cherry.children) == 2
    w = parse_tree("2(1(3))")
    assert w.size == 3 and w.weight == 6
    assert [v.decoration.weight for v in w.vertices] == [2, 1, 3]


@pytest.mark.parametrize("bad", ["", "1(", "1(1,)", "x", "1)(", "0"])
def test_parse_rejects(bad):
    with pytest.raises((TreeSyntaxError, ValueError)):
        parse_tree(bad)


def test_syntax_error_has_position():
    with pytest.raises(TreeSyntaxError) as info:
        parse_tree("1(1,")
    assert info.value.pos >= 3


def test_canonical_form_forgets_order():
    assert canonicalize(parse_tree("1(1(1),1)")) == canonicalize(parse_tree("1(1,1(1))"))
    assert canonicalize(parse_tree("1")).size == 1
    plane4 = enumerate_trees(4, ONE, plane=True)
    assert len(plane4) == 5
    assert len({canonicalize(t) for t in plane4}) == 4


def test_symmetry_counts():
    assert aut_order(canonicalize(parse_tree("1"))) == 1
    assert aut_order(canonicalize(parse_tree("1(1,1)"))) == 2
    assert aut_order(canonicalize(parse_tree("1(1,1,1)"))) == 6
    assert plane_embeddings(canonicalize(ladder(3))) == 1
    assert plane_embeddings(canonicalize(parse_tree("1(1,1)"))) == 1
    assert plane_embeddings(canonicalize(parse_tree("1(1,1(1))"))) == 2


def test_enumeration_examples():
    three = enumerate_trees(3, ONE)
    assert {t.to_text() for t in three} == {"1(1(1))", "1(1,1)"}
    two = enumerate_trees(2, [Decoration(1), Decoration(2)])
    assert sorted(t.size for t in two) == [1, 2]


def test_rooted_and_plane_counts():
    rooted = [1, 1, 2, 4, 9, 20, 48, 115]
    assert [len(enumerate_trees(n, ONE)) for n in range(1, 9)] == rooted
    assert [len(enumerate_trees(n, ONE, plane=True)) for n in range(1, 9)] == [
        comb(2 * k, k) // (k + 1) for k in range(8)]


def test_plane_embeddings_match_orderings():
    for n in range(1, 7):
        for t in enumerate_trees(n, ONE):
            assert plane_embeddings(t) == len(plane_orderings(t))


def test_edge_split_examples():
    l3 = ladder(3)
    low, up = edge_split(l3, 2)
    assert (low.size, up.size) == (1, 2)
    low, up = edge_split(l3, 1)
    assert (low.size, up.size) == (2, 1)
    cherry = parse_tree("1(1,1)")
    for e in (1, 2):
        low, up = edge_split(cherry, e)
        assert low.size == 1 and up.to_text() == "1(1)"


def test_decreasing_labellings_examples():
    assert all(decreasing_labellings(ladder(n)) == 1 for n in range(1, 8))
    assert decreasing_labellings(corolla(4)) == 6


@given(plane_trees(max_size=6))
def test_decreasing_labellings_brute_force(t):
    import itertools

    verts = t.vertices
    count = 0
    for perm in itertools.permutations(range(1, t.size + 1)):
        if all(perm[v.parent] > perm[v.id] for v in verts if v.parent is not None):
            count += 1
    assert decreasing_labellings(t) == count


@given(plane_trees(max_size=8, weights=(1, 2, 3)))
def test_text_and_json_round_trip(t):
    assert parse_tree(t.to_text()) == t
    assert PlaneTree.from_json(json.loads(json.dumps(t.to_json()))) == t
    c = canonicalize(t)
    assert RootedTree.from_json(c.to_json()) == c


@given(plane_trees(max_size=8))
def test_preorder_ids(t):
    verts = t.vertices
    assert [v.id for v in verts] == list(range(t.size))
    assert all(v.parent < v.id for v in verts[1:])


def test_labelling_sums():
    from fractions import Fraction
    from math import factorial

    for n in range(1, 8):
        plane = sum(decreasing_labellings(t) for t in enumerate_trees(n, ONE, plane=True))
        double = 1
        for k in range(2 * n - 3, 0, -2):
            double *= k
        assert plane == double
        rooted = sum(Fraction(decreasing_labellings(t), aut_order(t)) for t in enumerate_trees(n, ONE))
        assert rooted == factorial(n - 1)
