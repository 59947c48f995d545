"""Commutative Hopf algebra of decorated rooted forests.

Forests are canonically sorted tuples of :class:`RootedTree`; the empty tuple
is the unit.  Linear maps out of the algebra are plain callables on forests,
wrapped in :class:`Functional` so that convolution results are memoized.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from .feynman import tree_amplitude
from .mellin import MellinTable
from .rings import LPoly, binomial
from .trees import Decoration, RootedTree, canonicalize, enumerate_trees
from .tubings import enumerate_tubings, mellin_monomial

Forest = Tuple[RootedTree, ...]
TensorSum = Dict[Tuple[Forest, Forest], int]
EMPTY: Forest = ()


def forest(*trees) -> Forest:
    return tuple(sorted((canonicalize(t) for t in trees), key=lambda t: t.key))


def forest_size(f: Forest) -> int:
    return sum(t.size for t in f)


def b_plus(f: Iterable[RootedTree], d: Decoration = Decoration()) -> RootedTree:
    """Graft the trees of ``f`` onto a new root decorated by ``d``."""
    return RootedTree(d, tuple(canonicalize(t) for t in f))


# ---------------------------------------------------------------------------
# coproduct


def _cuts(t: RootedTree) -> List[Tuple[Tuple[RootedTree, ...], Optional[RootedTree]]]:
    """Admissible cuts as (cut-off subtrees, remaining trunk or None)."""
    out = [((t,), None)]
    per_child = [_cuts(c) for c in t.children]
    for combo in itertools.product(*per_child):
        pruned: List[RootedTree] = []
        kept: List[RootedTree] = []
        for cut_off, trunk in combo:
            pruned.extend(cut_off)
            if trunk is not None:
                kept.append(trunk)
        out.append((tuple(pruned), RootedTree(t.decoration, tuple(kept))))
    return out


def tree_coproduct(t: RootedTree) -> TensorSum:
    out: TensorSum = {}
    for pruned, trunk in _cuts(canonicalize(t)):
        key = (forest(*pruned), forest(trunk) if trunk is not None else EMPTY)
        out[key] = out.get(key, 0) + 1
    return out


def tensor_mul(x: TensorSum, y: TensorSum) -> TensorSum:
    out: TensorSum = {}
    for (a1, b1), c1 in x.items():
        for (a2, b2), c2 in y.items():
            key = (forest(*a1, *a2), forest(*b1, *b2))
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def coproduct(f) -> TensorSum:
    """``Δ`` on a forest (or a single tree), extended multiplicatively."""
    if isinstance(f, RootedTree) or hasattr(f, "decoration"):
        f = forest(f)
    result: TensorSum = {(EMPTY, EMPTY): 1}
    for t in f:
        result = tensor_mul(result, tree_coproduct(t))
    return result


def counit(f: Forest):
    return Fraction(1) if not f else Fraction(0)


def coassociativity_holds(f: Forest) -> bool:
    left: Dict[Tuple[Forest, Forest, Forest], int] = {}
    right: Dict[Tuple[Forest, Forest, Forest], int] = {}
    for (a, b), c in coproduct(f).items():
        for (a1, a2), c1 in coproduct(a).items():
            k = (a1, a2, b)
            left[k] = left.get(k, 0) + c * c1
        for (b1, b2), c2 in coproduct(b).items():
            k = (a, b1, b2)
            right[k] = right.get(k, 0) + c * c2
    strip = lambda d: {k: v for k, v in d.items() if v}
    return strip(left) == strip(right)


def counit_holds(f: Forest) -> bool:
    d = coproduct(f)
    left: Dict[Forest, int] = {}
    right: Dict[Forest, int] = {}
    for (a, b), c in d.items():
        if not a:
            right[b] = right.get(b, 0) + c
        if not b:
            left[a] = left.get(a, 0) + c
    return left == {f: 1} and right == {f: 1}


def bplus_cocycle_holds(f: Forest, d: Decoration = Decoration()) -> bool:
    """``Δ B+ = B+ ⊗ 1 + (id ⊗ B+) Δ`` on one forest."""
    lhs = coproduct(b_plus(f, d))
    rhs: TensorSum = {(forest(b_plus(f, d)), EMPTY): 1}
    for (a, b), c in coproduct(f).items():
        key = (a, forest(b_plus(b, d)))
        rhs[key] = rhs.get(key, 0) + c
    return lhs == {k: v for k, v in rhs.items() if v}


def forests_up_to(max_size: int, decorations: Optional[Iterable[Decoration]] = None) -> List[Forest]:
    """All forests (including the empty one) with at most ``max_size`` vertices.

    ``decorations`` defaults to a single weight-1 decoration; size counts
    vertices, not weight.
    """
    decs = list(decorations) if decorations is not None else [Decoration(1)]
    by_size: Dict[int, List[RootedTree]] = {}
    for n in range(1, max_size + 1):
        by_size[n] = _trees_by_size(n, tuple(sorted(set(decs), key=lambda d: d.key)))
    pool = sorted((t for ts in by_size.values() for t in ts), key=lambda t: t.key)
    out: List[Forest] = []

    def grow(start, remaining, acc):
        out.append(tuple(acc))
        for i in range(start, len(pool)):
            t = pool[i]
            if t.size <= remaining:
                acc.append(t)
                grow(i, remaining - t.size, acc)
                acc.pop()

    grow(0, max_size, [])
    return sorted(set(out), key=lambda f: (forest_size(f), [t.key for t in f]))


def _trees_by_size(n: int, decs: tuple) -> List[RootedTree]:
    # enumerate shapes with weight-1 vertices, then decorate every vertex
    shapes = enumerate_trees(n, [Decoration(1)])
    if decs == (Decoration(1),):
        return shapes
    out = set()
    for shape in shapes:
        verts = shape.vertices
        for choice in itertools.product(decs, repeat=len(verts)):
            out.add(_redecorate(shape, choice))
    return sorted(out, key=lambda t: t.key)


def _redecorate(shape: RootedTree, choice) -> RootedTree:
    it = iter(choice)

    def build(node):
        d = next(it)
        return RootedTree(d, tuple(build(c) for c in node.children))

    return build(shape)


# ---------------------------------------------------------------------------
# functionals and convolution


class Functional:
    """A linear map on the forest algebra, memoized per forest."""

    def __init__(self, fn: Callable[[Forest], object], name: str = "f"):
        self._fn = fn
        self._memo: Dict[Forest, object] = {}
        self.name = name

    def __call__(self, f) -> object:
        if hasattr(f, "decoration"):
            f = forest(f)
        hit = self._memo.get(f)
        if hit is None:
            hit = self._fn(f)
            self._memo[f] = hit
        return hit

    def __mul__(self, other: "Functional") -> "Functional":
        return convolve(self, other)

    def __repr__(self):
        return f"Functional({self.name})"


EPSILON = Functional(counit, "ε")


def convolve(alpha: Functional, beta: Functional) -> Functional:
    """``(α * β)(f) = Σ α(f1) β(f2)`` over the coproduct of ``f``."""

    def fn(f: Forest):
        total = None
        for (a, b), c in coproduct(f).items():
            term = alpha(a) * beta(b) * c
            total = term if total is None else total + term
        return total

    return Functional(fn, f"({alpha.name}*{beta.name})")


def convolution_power(alpha: Functional, k: int) -> Functional:
    result = EPSILON
    for _ in range(k):
        result = convolve(result, alpha)
    return result


def character(on_tree: Callable[[RootedTree], object], one=Fraction(1), name: str = "χ") -> Functional:
    """Extend a map on trees multiplicatively to forests."""

    def fn(f: Forest):
        return scalar_prod_with_one((on_tree(t) for t in f), one)

    return Functional(fn, name)


def scalar_prod_with_one(values, one):
    total = one
    for v in values:
        total = total * v
    return total


# ---------------------------------------------------------------------------
# the characters coming from tubings


def feynman_character(table: MellinTable) -> Functional:
    """``ψ``: the multiplicative L-polynomial valued map ``t -> φ_L(t)``."""
    return character(lambda t: tree_amplitude(t, table), one=LPoly([1]), name="ψ")


def sigma(t, table: MellinTable):
    """``σ(t) = Σ_τ c[b(τ)-1, d(rt)] c(τ)`` for a single tree."""
    t = canonicalize(t)
    total = Fraction(0)
    for tub in enumerate_tubings(t):
        total = total + table.coeff(tub.b - 1, t.decoration) * mellin_monomial(tub, table)
    return total


def sigma_functional(table: MellinTable) -> Functional:
    """``σ`` on all forests, read off as the linear coefficient of ``ψ``.

    Nothing forces this to vanish on products; the infinitesimal-character
    law is therefore a genuine check.
    """
    psi = feynman_character(table)
    return Functional(lambda f: psi(f).coeff(1), "σ")


def sigma_star_k_formula(t, k: int, table: MellinTable):
    """``Σ_{τ: b(τ) >= k} c[b(τ)-k, d(rt)] c(τ)``."""
    t = canonicalize(t)
    total = Fraction(0)
    for tub in enumerate_tubings(t):
        if tub.b >= k:
            total = total + table.coeff(tub.b - k, t.decoration) * mellin_monomial(tub, table)
    return total


def exp_star(sig: Functional, f) -> LPoly:
    """``exp_*(Lσ)(f) = Σ_k L^k/k! σ^{*k}(f)``; the k=0 term is the counit."""
    if hasattr(f, "decoration"):
        f = forest(f)
    n = forest_size(f)
    coeffs = [counit(f)]
    power = EPSILON
    for k in range(1, n + 1):
        power = convolve(power, sig)
        coeffs.append(power(f) * Fraction(1, factorial(k)))
    return LPoly(coeffs)


# ---------------------------------------------------------------------------
# the cocycle Λ on K[L]


def lambda_cocycle(d: Decoration, table: MellinTable, p: LPoly) -> LPoly:
    """``Λ(L^n/n!) = Σ_{j=0..n} c[j,d] L^{n-j+1}/(n-j+1)!``, extended linearly."""
    if not isinstance(p, LPoly):
        p = LPoly([p])
    if p.is_zero():
        return LPoly()
    table.require(p.degree + 1)
    out = [Fraction(0)] * (p.degree + 2)
    for n, a in enumerate(p.coeffs):
        if a == 0:
            continue
        scaled = a * factorial(n)  # a L^n = a n! (L^n/n!)
        for j in range(n + 1):
            m = n - j + 1
            out[m] = out[m] + scaled * table.coeff(j, d) * Fraction(1, factorial(m))
    return LPoly(out)


def _lpoly_coproduct(p: LPoly) -> Dict[Tuple[int, int], object]:
    out: Dict[Tuple[int, int], object] = {}
    for n, a in enumerate(p.coeffs):
        for i in range(n + 1):
            v = a * binomial(n, i)
            out[(i, n - i)] = out.get((i, n - i), 0) + v
    return {k: v for k, v in out.items() if v != 0}


def lambda_cocycle_holds(d: Decoration, table: MellinTable, p: LPoly) -> bool:
    """``Δ Λ p = Λp ⊗ 1 + (id ⊗ Λ) Δ p`` in ``K[L] ⊗ K[L]``."""
    lhs = _lpoly_coproduct(lambda_cocycle(d, table, p))
    rhs: Dict[Tuple[int, int], object] = {}
    for i, c in enumerate(lambda_cocycle(d, table, p).coeffs):
        if c != 0:
            rhs[(i, 0)] = rhs.get((i, 0), 0) + c
    for (i, j), c in _lpoly_coproduct(p).items():
        image = lambda_cocycle(d, table, LPoly.monomial(j))
        for m, c2 in enumerate(image.coeffs):
            if c2 != 0:
                rhs[(i, m)] = rhs.get((i, m), 0) + c * c2
    rhs = {k: v for k, v in rhs.items() if v != 0}
    return lhs == rhs


# ---------------------------------------------------------------------------
# identity checks


def sigma_bplus_identity_check(d: Decoration, table: MellinTable, max_n: int,
                               decorations: Optional[Iterable[Decoration]] = None) -> bool:
    """``σ B+^(d) = Σ_i c[i,d] σ^{*i}`` on every forest with B+(f) of size ≤ max_n."""
    if max_n > 7:
        raise ValueError("max_n is limited to 7")
    sig = sigma_functional(table)
    powers = [EPSILON]
    for _ in range(max_n):
        powers.append(convolve(powers[-1], sig))
    for f in forests_up_to(max_n - 1, decorations):
        lhs = sig(forest(b_plus(f, d)))
        rhs = Fraction(0)
        for i in range(forest_size(f) + 1):
            rhs = rhs + table.coeff(i, d) * powers[i](f)
        if lhs != rhs:
            return False
    return True


def infinitesimal_character_holds(sig: Functional, a: Forest, b: Forest) -> bool:
    prod_f = forest(*a, *b)
    return sig(prod_f) == counit(a) * sig(b) + sig(a) * counit(b)


def random_functional(seed: int, name: str = "r", lo: int = -5, hi: int = 5) -> Functional:
    """A reproducible rational-valued linear map, keyed on the forest's text."""

    def fn(f: Forest):
        key = "|".join(t.to_text() for t in f)
        rng = random.Random(f"{seed}:{key}")
        return Fraction(rng.randint(lo, hi), rng.randint(1, 4))

    return Functional(fn, name)


def cocycle_convolution_holds(a: Functional, b: Functional, f: Forest,
                              d: Decoration = Decoration()) -> bool:
    """``(a*b)B+ = b(1) aB+ + a*(bB+)`` evaluated on one forest."""
    a_bp = Functional(lambda g: a(forest(b_plus(g, d))), "aB+")
    b_bp = Functional(lambda g: b(forest(b_plus(g, d))), "bB+")
    lhs = convolve(a, b)(forest(b_plus(f, d)))
    rhs = b(EMPTY) * a_bp(f) + convolve(a, b_bp)(f)
    return lhs == rhs
