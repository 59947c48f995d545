import pytest
from hypothesis import given

from conftest import plane_trees
from tubings_dse.linegraph import (SimpleGraph, all_tubes, complete_graph, is_maximal_atubing,
                                   is_valid_atubing, l_inverse, l_map, line_graph, maximal_atubings,
                                   path_graph)
from tubings_dse.trees import Decoration, corolla, enumerate_trees, ladder
from tubings_dse.tubings import count_tubings, enumerate_tubings


def test_line_graph_examples():
    for n in range(2, 7):
        assert line_graph(ladder(n)) == path_graph(n - 1)
        assert line_graph(corolla(n)) == complete_graph(n - 1)
    assert line_graph(ladder(1)).vertices == ()


def test_validity_examples():
    P3 = path_graph(3)
    assert is_valid_atubing(P3, [{1}, {1, 2}])
    assert is_maximal_atubing(P3, [{1}, {1, 2}])
    assert not is_maximal_atubing(P3, [{1}])
    assert not is_valid_atubing(P3, [{1, 2, 3}])
    assert not is_valid_atubing(P3, [{1}, {2}])
    assert is_valid_atubing(P3, [{1}, {3}])
    assert not is_valid_atubing(P3, [{1, 3}])


def test_maximal_counts():
    assert len(maximal_atubings(path_graph(3))) == 5
    assert len(maximal_atubings(complete_graph(3))) == 6
    assert maximal_atubings(path_graph(1)) == [()]
    assert len(maximal_atubings(complete_graph(4))) == 24
    with pytest.raises(ValueError):
        all_tubes(path_graph(9))


def test_ladder_4_pairs_with_path_3():
    images = {l_map(t) for t in enumerate_tubings(ladder(4))}
    assert images == set(maximal_atubings(path_graph(3)))
    (dot,) = enumerate_tubings(ladder(1))
    assert l_map(dot) == ()


@pytest.mark.parametrize("n", range(1, 7))
def test_bijection_exhaustive(n):
    for t in enumerate_trees(n, [Decoration(1)]):
        G = line_graph(t)
        maximal = maximal_atubings(G)
        assert len(maximal) == count_tubings(t)
        images = [l_map(tub) for tub in enumerate_tubings(t)]
        assert set(images) == set(maximal)
        for tub in enumerate_tubings(t):
            assert len(l_map(tub)) == max(n - 2, 0)
            assert l_inverse(t, l_map(tub)).node == tub.node
        for a in maximal:
            assert l_map(l_inverse(t, a)) == a


@given(plane_trees(min_size=3, max_size=7))
def test_every_image_is_maximal(t):
    G = line_graph(t)
    for tub in enumerate_tubings(t)[:10]:
        assert is_maximal_atubing(G, l_map(tub))


def test_inverse_rejects_non_maximal():
    with pytest.raises(ValueError):
        l_inverse(ladder(4), [frozenset({1})])


def test_graph_json():
    G = complete_graph(3)
    assert SimpleGraph.from_json(G.to_json()) == G
    assert SimpleGraph.from_json({"n": 2, "edges": [[1, 2]]}) == path_graph(2)
    with pytest.raises(ValueError):
        SimpleGraph.from_edges([1, 2], [(1, 3)])
