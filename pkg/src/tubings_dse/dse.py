"""Truncated series solutions of propagator-type Dyson-Schwinger equations.

The single equation is

    G(x, L) = 1 + sum_k x^k Λ^(k)( G^(1 + s k) )

and a system indexed by types ``a`` replaces ``G^(1+sk)`` with
``G_a^(1 + s_a k) * prod_{a' != a} G_{a'}^(s_{a'} k)`` and uses one Mellin
row per ``(a, k)``.  Sign conventions: ``G = 1 + c[0,1] L x + ...``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Mapping, Optional, Sequence

from .feynman import tree_amplitude, tubing_feynman_rules
from .hopf import exp_star, forest, sigma_functional
from .mellin import MellinTable
from .rings import LPoly, Poly, binomial, falling_factorial, format_scalar
from .trees import Decoration, aut_order, enumerate_trees

__all__ = [
    "DSESpec", "GreenSeries", "MellinTable", "tubing_feynman_rules", "tree_amplitude",
    "solve_tubing", "solve_fixed_point", "solve_exp_star", "solve_system",
    "anomalous_dimension", "gamma_k", "rge_check", "rge_report", "linear_dse_coeffs",
    "bell_partial", "anomalous_dimension_equation_residual", "tree_terms",
]


# ---------------------------------------------------------------------------
# data types


@dataclass
class GreenSeries:
    """``1 + sum_{n=1..order} x^n P_n(L)`` with ``P_n`` an :class:`LPoly`."""

    order: int
    terms: Dict[int, LPoly] = field(default_factory=dict)

    def coeff(self, n: int) -> LPoly:
        if n == 0:
            return LPoly([1])
        return self.terms.get(n, LPoly())

    def as_list(self) -> List[LPoly]:
        return [self.coeff(n) for n in range(self.order + 1)]

    @classmethod
    def from_list(cls, coeffs: Sequence[LPoly], order: int) -> "GreenSeries":
        return cls(order, {n: coeffs[n] for n in range(1, order + 1) if not coeffs[n].is_zero()})

    def __eq__(self, other):
        if not isinstance(other, GreenSeries):
            return NotImplemented
        return self.order == other.order and all(
            self.coeff(n) == other.coeff(n) for n in range(1, self.order + 1))

    def invariant_violations(self) -> List[str]:
        bad = []
        for n in range(1, self.order + 1):
            p = self.coeff(n)
            if p.coeff(0) != 0:
                bad.append(f"x^{n}: nonzero constant term")
            if p.degree > n:
                bad.append(f"x^{n}: L-degree {p.degree} exceeds {n}")
        return bad

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "terms": [
                {"n": n, "L_coeffs": [format_scalar(c) for c in self.coeff(n).coeffs]}
                for n in range(1, self.order + 1)
            ],
        }


@dataclass
class DSESpec:
    """Equation data.  ``s`` is a rational for one equation or a mapping type -> rational."""

    s: object
    mellin: MellinTable
    order: int

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 1:
            raise ValueError("order must be an integer >= 1")
        if isinstance(self.s, Mapping):
            self.s = {a: Fraction(v) for a, v in self.s.items()}
            missing = set(self.mellin.types) - set(self.s)
            if missing:
                raise ValueError(f"no s given for types {sorted(missing)}")
        else:
            self.s = Fraction(self.s)
            if len(self.mellin.types) != 1:
                raise ValueError("single-equation mode needs one decoration type")

    @property
    def is_system(self) -> bool:
        return isinstance(self.s, dict)

    @property
    def s_map(self) -> Dict[str, Fraction]:
        if self.is_system:
            return dict(self.s)
        return {t: self.s for t in self.mellin.types}

    def check_truncation(self):
        # b(τ) <= number of vertices <= order, so indices up to order-1 suffice
        self.mellin.require(self.order)


# ---------------------------------------------------------------------------
# series helpers


def _series_mul(a: List[LPoly], b: List[LPoly], order: int) -> List[LPoly]:
    out = [LPoly() for _ in range(order + 1)]
    for i, p in enumerate(a):
        if p.is_zero():
            continue
        for j in range(0, order + 1 - i):
            q = b[j]
            if not q.is_zero():
                out[i + j] = out[i + j] + p * q
    return out


def _series_pow(g: List[LPoly], p, order: int) -> List[LPoly]:
    """``g**p`` for ``g = 1 + O(x)`` via ``sum_r C(p, r) (g-1)^r``."""
    plus = [LPoly()] + list(g[1:order + 1])
    result = [LPoly([1])] + [LPoly() for _ in range(order)]
    power = [LPoly([1])] + [LPoly() for _ in range(order)]
    for r in range(1, order + 1):
        coef = binomial(p, r)
        if coef == 0:
            # only happens for integer 0 <= p < r, and then for all larger r too
            break
        power = _series_mul(power, plus, order)
        result = [result[n] + power[n] * coef for n in range(order + 1)]
    return result


# ---------------------------------------------------------------------------
# tubing expansion


def _vertex_factor(tree, s_map: Mapping[str, Fraction], plane: bool):
    """``prod_v ξ(v, s)``; binomial version for plane trees."""
    total = Fraction(1)
    for v in tree.vertices:
        own = v.decoration.type_tag
        counts: Dict[str, int] = {}
        for c in v.children:
            tag = tree.vertices[c].decoration.type_tag
            counts[tag] = counts.get(tag, 0) + 1
        w = v.decoration.weight
        for tag, k in counts.items():
            base = s_map[tag] * w + (1 if tag == own else 0)
            total *= binomial(base, k) if plane else falling_factorial(base, k)
        if total == 0:
            return total
    return total


def tree_terms(spec: DSESpec, plane: bool = False, root_type: Optional[str] = None,
               enumerate_all: bool = False):
    """Yield ``(tree, prefactor, amplitude)`` for each tree in the expansion.

    ``prefactor`` already includes ``1/|Aut|`` in the non-plane form.  The
    amplitude is skipped (``None``) when the prefactor vanishes unless
    ``enumerate_all`` is set.
    """
    s_map = spec.s_map
    decs = spec.mellin.decorations
    for n in range(1, spec.order + 1):
        for t in enumerate_trees(n, decs, plane=plane):
            if root_type is not None and t.decoration.type_tag != root_type:
                continue
            factor = _vertex_factor(t, s_map, plane)
            if not plane:
                factor = factor / aut_order(t)
            amp = None
            if factor != 0 or enumerate_all:
                amp = tree_amplitude(t, spec.mellin)
            yield t, factor, amp


def _worker_count(workers: Optional[int]) -> int:
    if workers is not None:
        return max(1, int(workers))
    env = os.environ.get("TUBINGS_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            return 1
    return 1


def _amp_job(args):
    t, table = args
    return tree_amplitude(t, table)


def _solve_trees(spec: DSESpec, plane: bool, root_type: Optional[str], workers: Optional[int]):
    spec.check_truncation()
    s_map = spec.s_map
    jobs = []
    for n in range(1, spec.order + 1):
        for t in enumerate_trees(n, spec.mellin.decorations, plane=plane):
            if root_type is not None and t.decoration.type_tag != root_type:
                continue
            factor = _vertex_factor(t, s_map, plane)
            if factor == 0:
                continue
            if not plane:
                factor = factor / aut_order(t)
            jobs.append((t, factor))
    nworkers = _worker_count(workers)
    if nworkers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=nworkers) as pool:
            amps = list(pool.map(_amp_job, [(t, spec.mellin) for t, _ in jobs], chunksize=8))
    else:
        amps = [tree_amplitude(t, spec.mellin) for t, _ in jobs]
    coeffs = [LPoly([1])] + [LPoly() for _ in range(spec.order)]
    # reduction in a fixed order keeps the output deterministic
    for (t, factor), amp in zip(jobs, amps):
        coeffs[t.weight] = coeffs[t.weight] + amp * factor
    return GreenSeries.from_list(coeffs, spec.order)


def solve_tubing(spec: DSESpec, plane: bool = False, workers: Optional[int] = None) -> GreenSeries:
    """Sum over trees of ``x^{w(t)} ξ(t)/|Aut(t)| φ_L(t)`` (single equation)."""
    if spec.is_system:
        raise ValueError("solve_tubing takes a single equation; use solve_system")
    return _solve_trees(spec, plane, None, workers)


def solve_system(spec: DSESpec, workers: Optional[int] = None) -> Dict[str, GreenSeries]:
    """Tubing expansion for every type of a system."""
    return {a: _solve_trees(spec, False, a, workers) for a in spec.mellin.types}


# ---------------------------------------------------------------------------
# fixed-point oracle


def _apply_lambda(dec: Decoration, table: MellinTable, series: List[LPoly], order: int):
    from .hopf import lambda_cocycle

    w = dec.weight
    out = [LPoly() for _ in range(order + 1)]
    for n in range(0, order + 1 - w):
        if not series[n].is_zero():
            out[n + w] = lambda_cocycle(dec, table, series[n])
    return out


def _fixed_point(spec: DSESpec) -> Dict[str, List[LPoly]]:
    spec.check_truncation()
    N = spec.order
    s_map = spec.s_map
    types = spec.mellin.types
    one = [LPoly([1])] + [LPoly() for _ in range(N)]
    G = {a: list(one) for a in types}
    for _ in range(N):
        new = {}
        for a in types:
            acc = list(one)
            for dec in spec.mellin.decorations:
                if dec.type_tag != a:
                    continue
                k = dec.weight
                if k > N:
                    continue
                inner = _series_pow(G[a], 1 + s_map[a] * k, N)
                for other in types:
                    if other != a and s_map[other] != 0:
                        inner = _series_mul(inner, _series_pow(G[other], s_map[other] * k, N), N)
                lam = _apply_lambda(dec, spec.mellin, inner, N)
                acc = [acc[n] + lam[n] for n in range(N + 1)]
            new[a] = acc
        G = new
    return G


def solve_fixed_point(spec: DSESpec):
    """Iterate the equation from ``G = 1``; order ``n`` is exact after ``n`` rounds.

    Returns a :class:`GreenSeries` for a single equation, a dict for systems.
    """
    G = _fixed_point(spec)
    if spec.is_system:
        return {a: GreenSeries.from_list(G[a], spec.order) for a in G}
    (only,) = G.values()
    return GreenSeries.from_list(only, spec.order)


# ---------------------------------------------------------------------------
# Hopf-algebraic evaluation


def solve_exp_star(spec: DSESpec) -> GreenSeries:
    """Same expansion as :func:`solve_tubing` but with ``φ(t) = exp_*(Lσ)(t)``."""
    if spec.is_system:
        raise ValueError("single equation only")
    spec.check_truncation()
    sig = sigma_functional(spec.mellin)
    coeffs = [LPoly([1])] + [LPoly() for _ in range(spec.order)]
    for n in range(1, spec.order + 1):
        for t in enumerate_trees(n, spec.mellin.decorations):
            factor = _vertex_factor(t, spec.s_map, False)
            if factor == 0:
                continue
            factor = factor / aut_order(t)
            coeffs[n] = coeffs[n] + exp_star(sig, forest(t)) * factor
    return GreenSeries.from_list(coeffs, spec.order)


# ---------------------------------------------------------------------------
# anomalous dimension and the renormalization group


def gamma_k(G: GreenSeries, k: int) -> List:
    """``[x^n][L^k] G`` for ``n = 1..order``."""
    return [G.coeff(n).coeff(k) for n in range(1, G.order + 1)]


def anomalous_dimension(G: GreenSeries) -> List:
    return gamma_k(G, 1)


def _coeff_series_mul(a: List, b: List, order: int) -> List:
    # both indexed from x^1; result indexed from x^1, truncated at order
    out = [Fraction(0)] * order
    for i, p in enumerate(a, start=1):
        if p == 0:
            continue
        for j, q in enumerate(b, start=1):
            if i + j > order:
                break
            out[i + j - 1] = out[i + j - 1] + p * q
    return out


def rge_report(G: GreenSeries, s) -> List[str]:
    """Mismatches of ``k γ_k = γ (1 + s x d/dx) γ_{k-1}`` (empty when it holds)."""
    s = Fraction(s)
    problems = list(G.invariant_violations())
    N = G.order
    gamma = anomalous_dimension(G)
    prev = gamma
    for k in range(2, N + 1):
        lifted = [(1 + s * n) * c for n, c in enumerate(prev, start=1)]
        rhs = _coeff_series_mul(gamma, lifted, N)
        cur = gamma_k(G, k)
        for n in range(N):
            if k * cur[n] != rhs[n]:
                problems.append(f"k={k}, x^{n + 1}")
        prev = cur
    if s == 0:
        power = gamma
        for k in range(2, N + 1):
            power = _coeff_series_mul(power, gamma, N)
            cur = gamma_k(G, k)
            for n in range(N):
                if cur[n] != power[n] * Fraction(1, factorial(k)):
                    problems.append(f"closed form k={k}, x^{n + 1}")
    return problems


def rge_check(G: GreenSeries, s) -> bool:
    return not rge_report(G, s)


# ---------------------------------------------------------------------------
# linear equation closed form


def _partitions_into(n: int, j: int, largest: int):
    """Multisets of ``j`` positive parts summing to ``n``, parts <= largest."""
    if j == 0:
        if n == 0:
            yield ()
        return
    for first in range(min(n - j + 1, largest), 0, -1):
        for rest in _partitions_into(n - first, j - 1, first):
            yield (first,) + rest


def bell_partial(n: int, j: int, args: Sequence):
    """Partial Bell polynomial ``B_{n,j}(x_1, x_2, ...)`` with ``args[m-1] = x_m``."""
    if not 1 <= j <= n:
        if n == 0 and j == 0:
            return Fraction(1)
        raise ValueError("need 1 <= j <= n")
    if len(args) < n - j + 1:
        raise ValueError(f"need at least {n - j + 1} arguments")
    total = Fraction(0)
    for parts in _partitions_into(n, j, n - j + 1):
        mult: Dict[int, int] = {}
        for p in parts:
            mult[p] = mult.get(p, 0) + 1
        denom = 1
        term = Fraction(1)
        for m, i in mult.items():
            denom *= factorial(i) * factorial(m) ** i
            term = term * args[m - 1] ** i
        total = total + term * Fraction(factorial(n), denom)
    return total


def linear_dse_coeffs(table: MellinTable, order: int, dec: Decoration = Decoration(1)) -> List:
    """``[x^n] γ`` of the linear (s = 0) single-kernel equation, n = 1..order."""
    table.require(order)
    c = [table.coeff(i, dec) for i in range(order)]
    out = [c[0]]
    for n in range(2, order + 1):
        args = [factorial(m) * c[m] for m in range(1, n)]
        total = Fraction(0)
        for j in range(1, n):
            total = total + c[0] ** (n - j) * Fraction(1, factorial(n - j)) * bell_partial(n - 1, j, args)
        out.append(total)
    return out


# ---------------------------------------------------------------------------
# the pseudo-differential equation for γ (single kernel), as a series identity


def anomalous_dimension_equation_residual(gamma: Sequence, s, table: MellinTable,
                                          dec: Decoration = Decoration(1)) -> List:
    """Residual of ``(1/(ρF(ρ)))|_{ρ -> γ(1 + s x d/dx)} γ - x`` up to ``x^len(gamma)``.

    Needs an invertible rational ``c[0]``; the operator ``ρ^n`` acts as
    ``(γ (1 + s x d/dx))^n`` on ``γ``.
    """
    s = Fraction(s)
    N = len(gamma)
    c = [table.coeff(i, dec) for i in range(min(table.length, N + 1))]
    if isinstance(c[0], Poly) or c[0] == 0:
        raise ValueError("c[0] must be a nonzero rational")
    # d = 1 / (sum c_n ρ^n) as a power series in ρ
    d = [Fraction(1) / c[0]]
    for m in range(1, N + 1):
        acc = Fraction(0)
        for i in range(1, m + 1):
            ci = c[i] if i < len(c) else Fraction(0)
            acc = acc + ci * d[m - i]
        d.append(-acc / c[0])
    gamma = list(gamma)
    total = [d[0] * g for g in gamma]
    current = gamma
    for m in range(1, N + 1):
        lifted = [(1 + s * n) * v for n, v in enumerate(current, start=1)]
        current = _coeff_series_mul(gamma, lifted, N)
        total = [total[i] + d[m] * current[i] for i in range(N)]
    total[0] = total[0] - 1
    return total
