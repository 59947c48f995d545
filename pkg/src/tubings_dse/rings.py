"""Exact scalar rings: rationals and sparse multivariate polynomials over Q.

Coefficients anywhere in the package are either :class:`fractions.Fraction`
values or :class:`Poly` instances.  Both support ``+``, ``-``, ``*`` and
comparison with ``0``, so the series code never needs to know which one it
is holding.  There is no floating point in this module.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, Mapping, Tuple, Union

Monomial = Tuple[Tuple[str, int], ...]
Scalar = Union[int, Fraction, "Poly"]


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for name, e in m2:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


class Poly:
    """Sparse polynomial in named commuting symbols with rational coefficients.

    A monomial is a sorted tuple of ``(symbol, exponent)`` pairs; the empty
    tuple is the constant monomial.  Instances are treated as immutable.

    >>> c0, c1 = Poly.symbol("c0"), Poly.symbol("c1")
    >>> str((c0 + c1) * (c0 - c1))
    'c0^2 - c1^2'
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        self.terms: Dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                if c != 0:
                    self.terms[m] = Fraction(c)
        self._hash = None

    @classmethod
    def symbol(cls, name: str) -> "Poly":
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def const(cls, value) -> "Poly":
        return cls({(): Fraction(value)})

    @staticmethod
    def lift(value) -> "Poly":
        if isinstance(value, Poly):
            return value
        if isinstance(value, (int, Fraction)):
            return Poly.const(value)
        return NotImplemented

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = Poly.lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = Poly.lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = Poly.lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result: Poly = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing -------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {(): Fraction(other)}
        if isinstance(other, Poly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection -----------------------------------------------------
    def is_constant(self) -> bool:
        return not self.terms or list(self.terms) == [()]

    def constant(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def symbols(self) -> set:
        return {name for m in self.terms for name, _ in m}

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def evaluate(self, values: Mapping[str, Scalar]):
        """Substitute symbols; unknown symbols are left in place."""
        total: Scalar = Fraction(0)
        for m, c in self.terms.items():
            term: Scalar = c
            for name, e in m:
                if name in values:
                    term = term * values[name] ** e
                else:
                    term = term * Poly.symbol(name) ** e
            total = total + term
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for m in sorted(self.terms, key=lambda m: (-sum(e for _, e in m), m)):
            c = self.terms[m]
            body = "*".join(n if e == 1 else f"{n}^{e}" for n, e in m)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not body:
                text = format_rational(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{format_rational(mag)}*{body}"
            pieces.append((sign, text))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"Poly({str(self)!r})"


def is_zero(value) -> bool:
    return value == 0


def format_rational(q) -> str:
    """``p/q`` for non-integers, ``p`` otherwise."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(value) -> str:
    if isinstance(value, Poly):
        if value.is_constant():
            return format_rational(value.constant())
        return str(value)
    return format_rational(value)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def falling_factorial(x, k: int):
    """``x (x-1) ... (x-k+1)``; empty product for ``k = 0``."""
    out = Fraction(1)
    for i in range(k):
        out = out * (x - i)
    return out


def binomial(x, k: int):
    """Generalized binomial coefficient ``C(x, k)`` for rational ``x``."""
    if k < 0:
        return Fraction(0)
    return falling_factorial(x, k) / factorial(k)


def scalar_sum(values: Iterable[Scalar]) -> Scalar:
    total: Scalar = Fraction(0)
    for v in values:
        total = total + v
    return total


def scalar_prod(values: Iterable[Scalar]) -> Scalar:
    total: Scalar = Fraction(1)
    for v in values:
        total = total * v
    return total


class LPoly:
    """Polynomial in the log-scale variable ``L`` over the scalar ring.

    ``coeffs[i]`` is the coefficient of ``L**i``.  Trailing zeros are trimmed
    so that structural equality is value equality.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [c if isinstance(c, Poly) else Fraction(c) for c in coeffs]
        while cs and is_zero(cs[-1]):
            cs.pop()
        self.coeffs: Tuple[Scalar, ...] = tuple(cs)

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1) -> "LPoly":
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Scalar:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        if not isinstance(other, LPoly):
            other = LPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return LPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return LPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, LPoly):
            other = LPoly([other])
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LPoly):
            return LPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return LPoly()
        out: list = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return LPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, LPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, Poly)):
            return self == LPoly([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def derivative(self) -> "LPoly":
        return LPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def evaluate(self, value):
        total: Scalar = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * value + c
        return total

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if is_zero(c):
                continue
            text = format_scalar(c)
            if i:
                text = f"({text})*L" + (f"^{i}" if i > 1 else "")
            parts.append(text)
        return " + ".join(parts)

    def __repr__(self):
        return f"LPoly({str(self)!r})"
