from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import plane_trees
from tubings_dse import hopf
from tubings_dse.feynman import tree_amplitude
from tubings_dse.rings import LPoly, Poly
from tubings_dse.trees import Decoration, canonicalize, ladder, parse_tree

c0, c1, c2 = (Poly.symbol(f"c[{i},1]") for i in range(3))
dot = canonicalize(ladder(1))
l2 = canonicalize(ladder(2))


def test_coproduct_of_small_trees():
    E = hopf.EMPTY
    assert hopf.coproduct(dot) == {(hopf.forest(dot), E): 1, (E, hopf.forest(dot)): 1}
    assert hopf.coproduct(l2) == {
        (hopf.forest(l2), E): 1, (E, hopf.forest(l2)): 1, (hopf.forest(dot), hopf.forest(dot)): 1}
    cherry = canonicalize(parse_tree("1(1,1)"))
    assert hopf.coproduct(cherry)[(hopf.forest(dot), hopf.forest(l2))] == 2


def test_forest_count():
    assert len(hopf.forests_up_to(5)) == 37


@pytest.mark.parametrize("f", hopf.forests_up_to(5))
def test_bialgebra_laws(f):
    assert hopf.coassociativity_holds(f)
    assert hopf.counit_holds(f)
    if hopf.forest_size(f) <= 4:
        assert hopf.bplus_cocycle_holds(f)
        assert hopf.bplus_cocycle_holds(f, Decoration(2))


def test_lambda_examples(sym5):
    d = Decoration(1)
    assert hopf.lambda_cocycle(d, sym5, LPoly([1])) == LPoly([0, c0])
    assert hopf.lambda_cocycle(d, sym5, LPoly([0, 1])) == LPoly([0, c1, c0 * Fraction(1, 2)])
    assert all(hopf.lambda_cocycle_holds(d, sym5, LPoly.monomial(j)) for j in range(5))


def test_sigma_examples(sym5):
    assert hopf.sigma(dot, sym5) == c0
    assert hopf.sigma(l2, sym5) == c0 * c1
    assert hopf.sigma(parse_tree("1(1,1)"), sym5) == c2 * c0 * c0 * 2


def test_exp_star_examples(sym5):
    sig = hopf.sigma_functional(sym5)
    assert hopf.exp_star(sig, dot) == LPoly([0, c0])
    assert hopf.exp_star(sig, ladder(3)) == LPoly(
        [0, c1 * c1 * c0 + c2 * c0 * c0, c1 * c0 * c0, c0 ** 3 * Fraction(1, 6)])
    assert hopf.exp_star(sig, parse_tree("1(1,1)")) == LPoly(
        [0, c2 * c0 * c0 * 2, c0 * c0 * c1, c0 ** 3 * Fraction(1, 3)])


def test_sigma_identities(sym12):
    decs = [Decoration(1), Decoration(2)]
    for d in decs:
        assert hopf.sigma_bplus_identity_check(d, sym12, 5, decs)
    sig = hopf.sigma_functional(sym12)
    small = hopf.forests_up_to(5, decs)
    for a in small:
        for b in small:
            if hopf.forest_size(a) + hopf.forest_size(b) <= 5:
                assert hopf.infinitesimal_character_holds(sig, a, b)
    assert sig(hopf.EMPTY) == 0
    with pytest.raises(ValueError):
        hopf.sigma_bplus_identity_check(decs[0], sym12, 8)


def test_sigma_star_powers(sym12):
    sig = hopf.sigma_functional(sym12)
    trees = [f[0] for f in hopf.forests_up_to(5, [Decoration(1), Decoration(2)]) if len(f) == 1]
    power = hopf.EPSILON
    for k in range(1, 6):
        power = hopf.convolve(power, sig)
        for t in trees:
            assert power(t) == hopf.sigma_star_k_formula(t, k, sym12)


@given(plane_trees(max_size=5, weights=(1, 2)))
def test_phi_is_exp_of_sigma(t):
    from tubings_dse.mellin import MellinTable

    table = MellinTable.symbolic(6, [Decoration(1), Decoration(2)])
    assert hopf.exp_star(hopf.sigma_functional(table), t) == tree_amplitude(t, table)


@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_cocycle_convolution_random(sa, sb):
    a = hopf.random_functional(sa, "a")
    b = hopf.random_functional(sb, "b")
    for f in hopf.forests_up_to(3):
        assert hopf.cocycle_convolution_holds(a, b, f)


def test_convolution_unit_and_associativity():
    a, b, c = (hopf.random_functional(s) for s in (1, 2, 3))
    for f in hopf.forests_up_to(4):
        assert hopf.convolve(a, hopf.EPSILON)(f) == a(f) == hopf.convolve(hopf.EPSILON, a)(f)
        assert ((a * b) * c)(f) == (a * (b * c))(f)
