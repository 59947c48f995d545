import itertools
import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from conftest import plane_trees
from tubings_dse import chords
from tubings_dse.chords import ChordDiagram
from tubings_dse.dse import DSESpec, solve_tubing
from tubings_dse.mellin import MellinTable
from tubings_dse.trees import Decoration, corolla, enumerate_trees, ladder
from tubings_dse.tubings import enumerate_tubings, random_tubing

GOLDEN = ChordDiagram.parse("(1,4)(2,8)(3,5)(6,11)(7,9)(10,12)")


@st.composite
def matchings(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    points = draw(st.permutations(list(range(1, 2 * n + 1))))
    return ChordDiagram(tuple(zip(points[::2], points[1::2])))


def test_parse_and_json():
    C = ChordDiagram.parse("(2,4)(1,3)")
    assert C.chords == ((1, 3), (2, 4)) and C.root == (1, 3)
    assert ChordDiagram.from_json(C.to_json()) == C
    W = ChordDiagram(((1, 3), (2, 4)), (2, 1))
    assert ChordDiagram.from_json(W.to_json()) == W and W.total_weight == 3
    for bad in ["(1,2)(2,3)", "(1,3)", "hello", "(1,2)x"]:
        with pytest.raises(ValueError):
            ChordDiagram.parse(bad)


def test_classification_examples():
    assert chords.is_connected(GOLDEN)
    odd = ChordDiagram.parse("(1,5)(2,8)(3,4)(6,10)(7,9)")
    assert not chords.is_decomposable(odd) and not chords.is_connected(odd)
    single = chords.classify(ChordDiagram.parse("(1,2)"))
    assert single["connected"] and single["noncrossing"] and single["oneTerminal"]
    assert chords.is_decomposable(ChordDiagram.parse("(1,2)(3,4)"))


def test_intersection_order_golden():
    labels = chords.intersection_order(GOLDEN)
    assert labels.terminals == (4, 5, 6)
    want = {(1, 4): 1, (2, 8): 2, (6, 11): 3, (10, 12): 4, (7, 9): 5, (3, 5): 6}
    assert labels.label == want
    one = chords.intersection_order(ChordDiagram.parse("(1,2)"))
    assert one.label == {(1, 2): 1} and one.terminals == (1,)
    with pytest.raises(ValueError):
        chords.intersection_order(ChordDiagram.parse("(1,2)(3,4)"))


def test_connected_counts():
    assert [len(chords.enumerate_connected_diagrams(n)) for n in range(1, 7)] == [1, 1, 4, 27, 248, 2830]
    assert [len(chords.enumerate_diagrams(n)) for n in (2, 3)] == [3, 15]


def test_theta_goldens():
    (dot,) = enumerate_tubings(ladder(1))
    assert chords.theta(dot) == ChordDiagram.parse("(1,2)")
    images = {str(t): chords.theta(t).to_text() for t in enumerate_tubings(ladder(3))}
    assert images == {
        "{0} {1} {2} {1,2} {0,1,2}": "(1,4)(2,6)(3,5)",
        "{0} {1} {2} {0,1} {0,1,2}": "(1,4)(2,5)(3,6)",
    }


@pytest.mark.parametrize("n", range(1, 6))
def test_theta_mu_exhaustive(n):
    image = []
    for t in enumerate_trees(n, [Decoration(1)], plane=True):
        for tub in enumerate_tubings(t):
            C, vmap = chords.theta_with_map(tub)
            image.append(C)
            host, back = chords.mu(C)
            assert host == t and back.node == tub.node
            assert chords.terminal_correspondence_check(tub)
            nus = chords.nu(C)
            assert all(nus[vmap[v.id]] == len(v.children) for v in t.vertices)
    assert len(image) == len(set(image))
    assert set(image) == set(chords.enumerate_connected_diagrams(n))


def test_theta_mu_random_large():
    rng = random.Random(2024)
    pools = {n: enumerate_trees(n, [Decoration(1)], plane=True) for n in range(6, 9)}
    for _ in range(300):
        n = rng.randint(6, 8)
        tub = random_tubing(rng.choice(pools[n]), rng)
        host, back = chords.mu(chords.theta(tub))
        assert host == tub.host and back.node == tub.node


@given(plane_trees(max_size=7, weights=(1, 2, 3)))
def test_theta_carries_weights(t):
    for tub in enumerate_tubings(t)[:20]:
        C, vmap = chords.theta_with_map(tub)
        assert all(C.weight(vmap[v.id]) == v.decoration.weight for v in t.vertices)
        host, _ = chords.mu(C)
        assert host == t


def test_nu_examples():
    assert chords.nu(ChordDiagram.parse("(1,2)")) == {(1, 2): 0}
    assert chords.nu(ChordDiagram.parse("(1,3)(2,4)")) == {(1, 3): 0, (2, 4): 1}


def test_rtips_and_insertion_shift():
    t = corolla(3)
    assert chords.rtips(t) == [(0, 0), (1, 0), (0, 1), (2, 0), (0, 2)]
    for t in enumerate_trees(5, [Decoration(1)], plane=True):
        assert len(chords.rtips(t)) == 2 * t.size - 1
    upper = [(1, 3), (2, 4)]
    lower = [(1, 3), (2, 4)]
    for i in range(1, 4):
        new, _, _ = chords.insert_diagram(lower, upper, i)
        assert sorted(p for c in new for p in c) == list(range(1, 9))
        # 3 places before, 7 after: the new diagram gains 2|C'| = k + 1 places
        assert 2 * len(new) - 1 - (2 * len(upper) - 1) == 2 * len(lower)
    with pytest.raises(ValueError):
        chords.insert_diagram(lower, upper, 4)


def test_terminal_chord_of_root_is_rightmost():
    for C in chords.enumerate_connected_diagrams(5):
        labels = chords.intersection_order(C)
        first = labels.chord_with_label(labels.terminals[0])
        assert first == max(C.chords, key=lambda c: c[1])


def test_chord_expansion_matches_tubings():
    yk = MellinTable.yukawa(5)
    assert chords.chord_expansion(-2, yk, 5) == solve_tubing(DSESpec(-2, yk, 5))
    sym = MellinTable.symbolic(4, [Decoration(1), Decoration(2)])
    for s in (-1, -2, -3):
        want = solve_tubing(DSESpec(s, sym, 4), plane=True)
        assert chords.chord_expansion(s, sym, 4) == want
        assert chords.chord_expansion(s, sym, 4, form="signed") == want
    G1 = chords.chord_expansion(-1, MellinTable.symbolic(1), 1)
    assert G1.coeff(1).coeff(1) == MellinTable.symbolic(1).coeff(0, Decoration(1))


@pytest.mark.parametrize("s", [0, 1, Fraction(-1, 2)])
def test_chord_expansion_rejects_s(s):
    with pytest.raises(ValueError):
        chords.chord_expansion(s, MellinTable.yukawa(3), 3)


def test_term_for_term(sym12):
    for n in range(1, 5):
        for t in enumerate_trees(n, [Decoration(1), Decoration(2)], plane=True):
            for tub in enumerate_tubings(t):
                C = chords.theta(tub)
                for s in (-1, -2, -3):
                    assert chords.diagram_contribution(C, s, sym12) == chords.tubing_contribution(tub, s, sym12)


def test_special_classes():
    for n in range(1, 7):
        report = chords.special_class_report(n)
        assert all(report.values()), (n, report)


def test_corollas_are_not_one_terminal_permutations():
    images = [chords.theta(t) for t in enumerate_tubings(corolla(4))]
    assert not all(chords.is_permutation(C) for C in images)


def test_kappa():
    assert str(chords.kappa(ChordDiagram.parse("(1,2)"))) == "1"
    for n in range(1, 7):
        ones = [C for C in chords.enumerate_connected_diagrams(n) if len(chords.terminal_chords(C)) == 1]
        trees = [chords.kappa(C) for C in ones]
        assert all(t.is_decreasing() and t.size() == n for t in trees)
        assert {str(t) for t in trees} == {str(t) for t in chords.decreasing_trees(n)}
        assert len(ones) == len(set(map(str, trees)))
        perm = [chords.kappa(C) for C in ones if chords.is_permutation(C)]
        assert all(t.is_corolla() for t in perm)
        assert len({str(t) for t in perm}) == len(perm) == factorial(n - 1)
    with pytest.raises(ValueError):
        chords.kappa(GOLDEN)


def test_decreasing_tree_counts():
    assert [len(chords.decreasing_trees(n)) for n in range(1, 7)] == [1, 1, 3, 15, 105, 945]


def test_yukawa_nesting_trees():
    for n in range(1, 7):
        diagrams = chords.yukawa_diagrams(n)
        trees = {chords.yukawa_tree(C) for C in diagrams}
        assert len(diagrams) == len(trees)
        assert trees == set(enumerate_trees(n, [Decoration(1)], plane=True))
    with pytest.raises(ValueError):
        chords.yukawa_tree(ChordDiagram.parse("(1,3)(2,4)"))


@given(matchings())
def test_permutation_iff_no_separated_pair(C):
    has_pair = any(b1 < a2 for (a1, b1), (a2, b2) in itertools.permutations(C.chords, 2))
    assert chords.is_permutation(C) == (not has_pair)
    if chords.is_connected(C):
        assert not chords.is_decomposable(C)
        assert len(chords.terminal_chords(C)) >= 1
        host, tub = chords.mu(C)
        assert chords.theta(tub) == C


@given(matchings(max_n=5))
def test_standardize_is_idempotent(C):
    assert chords.standardize(C.chords) == C
    shifted = [(2 * a + 7, 2 * b + 7) for a, b in C.chords]
    assert chords.standardize(shifted) == C
