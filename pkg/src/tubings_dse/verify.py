"""Invariant suites shared by the test-suite and ``tubings-dse verify``.

Each suite yields ``(name, passed)`` pairs.  Sizes are capped by ``max_n`` so
the same code serves quick smoke runs and exhaustive ones.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Dict, Iterator, List, Tuple

from . import chords, hopf, linegraph
from .dse import (DSESpec, anomalous_dimension, linear_dse_coeffs, rge_check,
                  solve_exp_star, solve_fixed_point, solve_tubing)
from .feynman import tree_amplitude, tree_amplitude_enumerated
from .mellin import MellinTable
from .rings import LPoly
from .tubings import (count_tubings, enumerate_tubings, is_leaf_tubing, mellin_monomial,
                      mellin_monomial_recursive, random_tubing)
from .trees import Decoration, corolla, decreasing_labellings, enumerate_trees, ladder

Check = Tuple[str, bool]

ROOTED_TREE_COUNTS = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719]


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


ONE = [Decoration(1)]


def suite_trees(max_n: int, seed: int = 0) -> Iterator[Check]:
    top = min(max_n, len(ROOTED_TREE_COUNTS))
    yield "trees.rooted_counts", all(
        len(enumerate_trees(n, ONE)) == ROOTED_TREE_COUNTS[n - 1] for n in range(1, top + 1))
    yield "trees.plane_counts", all(
        len(enumerate_trees(n, ONE, plane=True)) == catalan(n - 1) for n in range(1, max_n + 1))


def suite_tubings(max_n: int, seed: int = 0) -> Iterator[Check]:
    yield "tubings.ladder_catalan", all(
        count_tubings(ladder(n + 1)) == catalan(n) for n in range(0, max(max_n, 2)))
    yield "tubings.corolla_factorial", all(
        count_tubings(corolla(n + 1)) == factorial(n) for n in range(0, max(max_n, 2)))
    tube_ok = bound_ok = count_ok = leaf_ok = mono_ok = True
    table = MellinTable.symbolic(max_n + 1)
    for n in range(1, max_n + 1):
        for t in enumerate_trees(n, ONE):
            tubs = enumerate_tubings(t)
            count_ok &= len(tubs) == count_tubings(t)
            tube_ok &= all(len(x.tubes) == 2 * n - 1 for x in tubs)
            bound_ok &= catalan(n - 1) <= len(tubs) <= factorial(max(n - 1, 0))
            leaf_ok &= sum(1 for x in tubs if is_leaf_tubing(x)) == decreasing_labellings(t)
            if n <= 5:
                mono_ok &= all(mellin_monomial(x, table) == mellin_monomial_recursive(x, table)
                               for x in tubs)
    yield "tubings.count_matches_enumeration", count_ok
    yield "tubings.tube_count", tube_ok
    yield "tubings.catalan_factorial_bound", bound_ok
    yield "tubings.leaf_tubings_decreasing_labellings", leaf_ok
    yield "tubings.mellin_monomial_recursion", mono_ok


def suite_hopf(max_n: int, seed: int = 0) -> Iterator[Check]:
    n = min(max_n, 5)
    decs = [Decoration(1), Decoration(2)]
    forests = hopf.forests_up_to(n)
    yield "hopf.coassociativity", all(hopf.coassociativity_holds(f) for f in forests)
    yield "hopf.counit", all(hopf.counit_holds(f) for f in forests)
    yield "hopf.bplus_cocycle", all(hopf.bplus_cocycle_holds(f) for f in forests if hopf.forest_size(f) < n)
    table = MellinTable.symbolic(n + 1, decs)
    sig = hopf.sigma_functional(table)
    small = hopf.forests_up_to(n, decs)
    trees = [f[0] for f in small if len(f) == 1]
    yield "hopf.sigma_direct", all(sig(t) == hopf.sigma(t, table) for t in trees)
    yield "hopf.sigma_infinitesimal", all(
        hopf.infinitesimal_character_holds(sig, a, b)
        for a in small for b in small if hopf.forest_size(a) + hopf.forest_size(b) <= n)
    power_ok = True
    power = hopf.EPSILON
    for k in range(1, n + 1):
        power = hopf.convolve(power, sig)
        power_ok &= all(power(t) == hopf.sigma_star_k_formula(t, k, table) for t in trees)
    yield "hopf.sigma_star_k", power_ok
    yield "hopf.sigma_bplus", all(hopf.sigma_bplus_identity_check(d, table, n, decs) for d in decs)
    yield "hopf.exp_star", all(hopf.exp_star(sig, t) == tree_amplitude(t, table) for t in trees)
    yield "hopf.lambda_cocycle", all(
        hopf.lambda_cocycle_holds(d, table, LPoly.monomial(j)) for d in decs for j in range(n))
    rng = random.Random(seed)
    a = hopf.random_functional(rng.randrange(10**6), "a")
    b = hopf.random_functional(rng.randrange(10**6), "b")
    yield "hopf.cocycle_convolution", all(
        hopf.cocycle_convolution_holds(a, b, f) for f in forests if hopf.forest_size(f) < n)


def suite_dse(max_n: int, seed: int = 0) -> Iterator[Check]:
    order = min(max_n, 5)
    agree = rge = True
    for decs in ([Decoration(1)], [Decoration(1), Decoration(2)]):
        table = MellinTable.symbolic(order, decs)
        for s in (Fraction(-2), Fraction(-1), Fraction(0), Fraction(1, 2)):
            spec = DSESpec(s, table, order)
            G = solve_tubing(spec)
            agree &= G == solve_fixed_point(spec) == solve_exp_star(spec)
            agree &= G == solve_tubing(spec, plane=True)
            rge &= rge_check(G, s)
        G0 = solve_tubing(DSESpec(0, table, order))
        if len(decs) == 1:
            agree &= anomalous_dimension(G0) == linear_dse_coeffs(table, order)
    yield "dse.solver_agreement", agree
    yield "dse.rge", rge
    order = max(max_n, 6)
    G = solve_tubing(DSESpec(0, MellinTable.yukawa(order), order))
    yield "dse.yukawa_catalan", anomalous_dimension(G) == [-catalan(k - 1) for k in range(1, order + 1)]
    yk = MellinTable.yukawa(max_n + 1)
    yield "dse.yukawa_tubing_prefactor", all(
        tree_amplitude_enumerated(t, yk).coeff(1) == -count_tubings(t)
        for n in range(1, max_n + 1) for t in enumerate_trees(n, ONE))


def _plane(n):
    return enumerate_trees(n, ONE, plane=True)


def suite_chords(max_n: int, seed: int = 0) -> Iterator[Check]:
    n_max = min(max_n, 6)
    round_trip = image_ok = terminal_ok = nu_ok = True
    for n in range(1, n_max + 1):
        image = []
        for t in _plane(n):
            for tub in enumerate_tubings(t):
                C, vmap = chords.theta_with_map(tub)
                image.append(C)
                host, back = chords.mu(C)
                round_trip &= host == t and back.node == tub.node
                terminal_ok &= chords.terminal_correspondence_check(tub)
                nus = chords.nu(C)
                nu_ok &= all(nus[vmap[v.id]] == len(v.children) for v in t.vertices)
        image_ok &= len(image) == len(set(image)) and set(image) == set(chords.enumerate_connected_diagrams(n))
    yield "chords.theta_mu_round_trip", round_trip
    yield "chords.theta_onto_connected", image_ok
    yield "chords.terminal_correspondence", terminal_ok
    yield "chords.nu_is_out_degree", nu_ok
    yield "chords.random_round_trip", random_round_trip(max(max_n, 6), 200, seed)
    yield "chords.special_classes", all(chords.special_class_check(n) for n in range(1, n_max + 1))
    kappa_ok = True
    for n in range(1, n_max + 1):
        ones = [C for C in chords.enumerate_connected_diagrams(n) if len(chords.terminal_chords(C)) == 1]
        images = {str(chords.kappa(C)) for C in ones}
        kappa_ok &= len(images) == len(ones) == double_factorial(2 * n - 3)
        kappa_ok &= images == {str(t) for t in chords.decreasing_trees(n)}
    yield "chords.kappa_bijection", kappa_ok
    order = min(max_n, 4)
    table = MellinTable.symbolic(order, [Decoration(1), Decoration(2)])
    expansion = True
    for s in (-1, -2, -3):
        G = chords.chord_expansion(s, table, order)
        expansion &= G == solve_tubing(DSESpec(s, table, order), plane=True)
        expansion &= G == chords.chord_expansion(s, table, order, form="signed")
    yield "chords.expansion_agrees", expansion


def random_round_trip(n_max: int, samples: int, seed: int) -> bool:
    rng = random.Random(seed)
    pools: Dict[int, list] = {}
    for _ in range(samples):
        n = rng.randint(1, n_max)
        pool = pools.setdefault(n, _plane(n))
        t = rng.choice(pool)
        tub = random_tubing(t, rng)
        C = chords.theta(tub)
        if not chords.is_connected(C) or C.n != n:
            return False
        host, back = chords.mu(C)
        if host != t or back.node != tub.node:
            return False
    return True


def suite_linegraph(max_n: int, seed: int = 0) -> Iterator[Check]:
    n_max = min(max_n, 6)
    yield "linegraph.path_5", len(linegraph.maximal_atubings(linegraph.path_graph(3))) == 5
    yield "linegraph.triangle_6", len(linegraph.maximal_atubings(linegraph.complete_graph(3))) == 6
    ok = True
    for n in range(1, n_max + 1):
        for t in enumerate_trees(n, ONE):
            G = linegraph.line_graph(t)
            maximal = linegraph.maximal_atubings(G)
            images = []
            for tub in enumerate_tubings(t):
                a = linegraph.l_map(tub)
                images.append(a)
                ok &= linegraph.l_inverse(t, a).node == tub.node
            ok &= len(maximal) == count_tubings(t) and set(images) == set(maximal)
            ok &= all(linegraph.l_map(linegraph.l_inverse(t, a)) == a for a in maximal)
    yield "linegraph.bijection", ok


SUITES: Dict[str, Callable[[int, int], Iterator[Check]]] = {
    "trees": suite_trees,
    "tubings": suite_tubings,
    "hopf": suite_hopf,
    "dse": suite_dse,
    "chords": suite_chords,
    "linegraph": suite_linegraph,
}


def run_suite(name: str, max_n: int = 5, seed: int = 0) -> List[Check]:
    if name == "all":
        out: List[Check] = []
        for key in SUITES:
            out.extend(SUITES[key](max_n, seed))
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return list(SUITES[name](max_n, seed))
