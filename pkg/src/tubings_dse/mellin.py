"""Mellin coefficient tables ``c[i, d]`` keyed by vertex decoration."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .rings import Poly, format_scalar, parse_rational
from .trees import DEFAULT_TYPE, Decoration


class MellinTruncationError(IndexError):
    """A coefficient beyond the table's truncation was requested."""


def symbol_name(i: int, dec: Decoration, typed: bool = False) -> str:
    if typed:
        return f"c[{i},{dec.type_tag},{dec.weight}]"
    return f"c[{i},{dec.weight}]"


class MellinTable:
    """Per-decoration coefficient sequences ``c_{0,d}, c_{1,d}, ...``.

    Every row has the same length, the truncation.  Entries are ``Fraction``
    or :class:`Poly` values.
    """

    def __init__(self, rows: Mapping[Decoration, Sequence], name: str = "custom"):
        if not rows:
            raise ValueError("a Mellin table needs at least one decoration")
        self.rows: Dict[Decoration, Tuple] = {}
        for dec, coeffs in rows.items():
            coeffs = tuple(c if isinstance(c, Poly) else Fraction(c) for c in coeffs)
            if not coeffs:
                raise ValueError(f"decoration {dec} has no c0 coefficient")
            self.rows[dec] = coeffs
        lengths = {len(c) for c in self.rows.values()}
        if len(lengths) != 1:
            raise ValueError(f"non-uniform truncation {sorted(lengths)}")
        self.length = lengths.pop()
        self.name = name

    # -- constructors ----------------------------------------------------
    @classmethod
    def yukawa(cls, length: int, decorations: Iterable[Decoration] = (Decoration(1),)):
        """``c_j = -(-1)**j`` for every listed decoration."""
        coeffs = [Fraction(-(-1) ** j) for j in range(length)]
        return cls({d: coeffs for d in decorations}, name="yukawa")

    @classmethod
    def symbolic(cls, length: int, decorations: Iterable[Decoration] = (Decoration(1),),
                 typed: bool = False):
        rows = {d: [Poly.symbol(symbol_name(i, d, typed)) for i in range(length)]
                for d in decorations}
        return cls(rows, name="symbolic")

    @classmethod
    def from_json(cls, obj, length: int | None = None):
        rows = {}
        for entry in obj["decorations"]:
            dec = Decoration(int(entry.get("k", entry.get("weight", 1))),
                             entry.get("type", DEFAULT_TYPE))
            coeffs = [_parse_entry(c) for c in entry["coeffs"]]
            if length is not None:
                coeffs = coeffs[:length]
            rows[dec] = coeffs
        return cls(rows, name=obj.get("name", "file"))

    @classmethod
    def load(cls, path, length: int | None = None):
        with open(Path(path), encoding="utf-8") as fh:
            return cls.from_json(json.load(fh), length)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "decorations": [
                {"type": d.type_tag, "k": d.weight, "coeffs": [format_scalar(c) for c in cs]}
                for d, cs in sorted(self.rows.items(), key=lambda kv: kv[0].key)
            ],
        }

    # -- access ----------------------------------------------------------
    @property
    def decorations(self) -> List[Decoration]:
        return sorted(self.rows, key=lambda d: d.key)

    @property
    def types(self) -> List[str]:
        return sorted({d.type_tag for d in self.rows})

    def has(self, dec: Decoration) -> bool:
        return dec in self.rows

    def coeff(self, i: int, dec: Decoration):
        row = self.rows.get(dec)
        if row is None:
            raise KeyError(f"no Mellin coefficients for decoration {dec}")
        if i < 0:
            raise ValueError(f"negative Mellin index {i}")
        if i >= len(row):
            raise MellinTruncationError(
                f"Mellin index {i} for decoration {dec} exceeds truncation {len(row)}")
        return row[i]

    def require(self, length: int):
        if self.length < length:
            raise MellinTruncationError(
                f"need {length} Mellin coefficients per decoration, table has {self.length}")

    def restrict(self, decorations: Iterable[Decoration]) -> "MellinTable":
        return MellinTable({d: self.rows[d] for d in decorations}, name=self.name)

    def __repr__(self):
        return f"MellinTable({self.name!r}, decorations={len(self.rows)}, length={self.length})"


def _parse_entry(text):
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    text = str(text).strip()
    try:
        return parse_rational(text)
    except ValueError:
        if not text:
            raise
        return Poly.symbol(text)
