"""Per-tubing and per-tree L-polynomials (the tubing Feynman rules)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict

from .mellin import MellinTable
from .rings import LPoly
from .trees import canonicalize, edge_split
from .tubings import Tubing, enumerate_tubings, mellin_monomial


def root_series(b: int, coeff_factor, table: MellinTable, root_dec) -> LPoly:
    """``coeff_factor * sum_{i=1..b} c[b-i, root] L^i / i!``."""
    coeffs = [Fraction(0)] * (b + 1)
    for i in range(1, b + 1):
        coeffs[i] = coeff_factor * table.coeff(b - i, root_dec) * Fraction(1, factorial(i))
    return LPoly(coeffs)


def tubing_feynman_rules(tub: Tubing, table: MellinTable) -> LPoly:
    """``c(τ) * sum_{i=1..b(τ)} c[b(τ)-i, d(rt)] L^i / i!``."""
    return root_series(tub.b, mellin_monomial(tub, table), table, tub.host.decoration)


def b_profile(t, table: MellinTable) -> Dict[int, object]:
    """Map ``b -> sum of c(τ)`` over tubings of ``t`` with ``b(τ) = b``.

    Computed by the split recursion on canonical subtrees, so it never
    materializes individual tubings.
    """
    return dict(_b_profile(canonicalize(t), table))


@lru_cache(maxsize=None)
def _b_profile(t, table):
    if t.size == 1:
        return ((1, Fraction(1)),)
    acc: Dict[int, object] = {}
    for e in t.edges:
        low, up = edge_split(t, e)
        low_prof = _b_profile(low, table)
        up_prof = _b_profile(up, table)
        # factor attached to the lower part's root
        low_sum = Fraction(0)
        for b1, c1 in low_prof:
            low_sum = low_sum + table.coeff(b1 - 1, low.decoration) * c1
        if low_sum == 0:
            continue
        for b2, c2 in up_prof:
            acc[b2 + 1] = acc.get(b2 + 1, Fraction(0)) + low_sum * c2
    return tuple(sorted((b, c) for b, c in acc.items() if c != 0))


def tree_amplitude(t, table: MellinTable) -> LPoly:
    """``φ_L(t)``, the sum of tubing contributions over all tubings of ``t``."""
    total = LPoly()
    for b, c in _b_profile(canonicalize(t), table):
        total = total + root_series(b, c, table, t.decoration)
    return total


def tree_amplitude_enumerated(t, table: MellinTable) -> LPoly:
    """Same as :func:`tree_amplitude` but by explicit tubing enumeration."""
    total = LPoly()
    for tub in enumerate_tubings(t):
        total = total + tubing_feynman_rules(tub, table)
    return total
