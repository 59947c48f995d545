import json
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given

from conftest import plane_trees
from tubings_dse.feynman import b_profile, tree_amplitude, tree_amplitude_enumerated, tubing_feynman_rules
from tubings_dse.mellin import MellinTable, MellinTruncationError
from tubings_dse.rings import LPoly, Poly
from tubings_dse.trees import Decoration, corolla, enumerate_trees, ladder, parse_tree
from tubings_dse.tubings import count_tubings, enumerate_tubings

c0, c1, c2 = (Poly.symbol(f"c[{i},1]") for i in range(3))
h, third, sixth = Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)


def test_small_tree_amplitudes(sym5):
    assert tree_amplitude(ladder(1), sym5) == LPoly([0, c0])
    assert tree_amplitude(ladder(2), sym5) == LPoly([0, c0 * c1, c0 * c0 * h])
    assert tree_amplitude(ladder(3), sym5) == LPoly(
        [0, c1 * c1 * c0 + c2 * c0 * c0, c1 * c0 * c0, c0 ** 3 * sixth])
    assert tree_amplitude(parse_tree("1(1,1)"), sym5) == LPoly(
        [0, c2 * c0 * c0 * 2, c0 * c0 * c1, c0 ** 3 * third])


def test_single_tubing_rules(sym5):
    (l2,) = enumerate_tubings(ladder(2))
    assert tubing_feynman_rules(l2, sym5) == LPoly([0, c0 * c1, c0 * c0 * h])
    for tub in enumerate_tubings(parse_tree("1(1,1)")):
        assert tubing_feynman_rules(tub, sym5) == LPoly([0, c0 * c0 * c2, c0 * c0 * c1 * h, c0 ** 3 * sixth])


def test_corolla_amplitude(sym5):
    # n+1 vertices: n! c0^n sum_{i=1..n+1} c_{n+1-i} L^i / i!
    table = MellinTable.symbolic(7)
    for n in range(0, 5):
        want = [Fraction(0)] + [
            Poly.symbol("c[0,1]") ** n * factorial(n) * Poly.symbol(f"c[{n + 1 - i},1]") * Fraction(1, factorial(i))
            for i in range(1, n + 2)]
        assert tree_amplitude(corolla(n + 1), table) == LPoly(want)


def test_yukawa_every_tubing_contributes_minus_one():
    yk = MellinTable.yukawa(7)
    for n in range(1, 7):
        for t in enumerate_trees(n, [Decoration(1)]):
            for tub in enumerate_tubings(t):
                assert tubing_feynman_rules(tub, yk).coeff(1) == -1


@given(plane_trees(max_size=6, weights=(1, 2)))
def test_profile_matches_enumeration(t):
    table = MellinTable.symbolic(7, [Decoration(1), Decoration(2)])
    assert tree_amplitude(t, table) == tree_amplitude_enumerated(t, table)
    prof = b_profile(t, MellinTable({Decoration(1): [1] * 7, Decoration(2): [1] * 7}))
    assert sum(prof.values()) == count_tubings(t)


def test_truncation_is_reported():
    short = MellinTable.symbolic(2)
    with pytest.raises(MellinTruncationError):
        tree_amplitude(ladder(3), short)


def test_mellin_table_io(tmp_path):
    table = MellinTable.from_json({"decorations": [
        {"type": "a", "k": 1, "coeffs": ["-1", "1", "c[2,1]"]},
        {"type": "a", "k": 2, "coeffs": ["1/2", 0, 3]}]})
    assert table.coeff(0, Decoration(2)) == Fraction(1, 2)
    assert table.coeff(2, Decoration(1)) == Poly.symbol("c[2,1]")
    path = tmp_path / "m.json"
    path.write_text(json.dumps(table.to_json()))
    again = MellinTable.load(path)
    assert again.to_json() == table.to_json()
    with pytest.raises(ValueError):
        MellinTable({Decoration(1): [1, 2], Decoration(2): [1]})
    with pytest.raises(KeyError):
        table.coeff(0, Decoration(3))
    assert MellinTable.yukawa(4).rows[Decoration(1)] == tuple(Fraction(x) for x in (-1, 1, -1, 1))
