"""Rooted chord diagrams and their correspondence with tubed plane trees.

Internally most routines work on sets of chords ``(a, b)`` with arbitrary
distinct integer endpoints; only the relative order of endpoints matters.
:class:`ChordDiagram` is the user-facing, standardized value (endpoints are
exactly ``1..2n``, chords sorted by source).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .mellin import MellinTable
from .rings import LPoly, binomial
from .trees import Decoration, PlaneTree, enumerate_trees
from .tubings import Leaf, Split, Tubing, enumerate_tubings, is_leaf_tubing

Chord = Tuple[int, int]


# ---------------------------------------------------------------------------
# the value type


@dataclass(frozen=True)
class ChordDiagram:
    chords: Tuple[Chord, ...]
    weights: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        pairs = [tuple(sorted(map(int, c))) for c in self.chords]
        weights = list(self.weights) if self.weights is not None else None
        if weights is not None and len(weights) != len(pairs):
            raise ValueError("one weight per chord expected")
        order = sorted(range(len(pairs)), key=lambda i: pairs[i][0])
        pairs = [pairs[i] for i in order]
        points = sorted(p for c in pairs for p in c)
        if points != list(range(1, 2 * len(pairs) + 1)):
            raise ValueError(f"endpoints must partition 1..{2 * len(pairs)}")
        if any(a == b for a, b in pairs):
            raise ValueError("a chord needs two distinct endpoints")
        object.__setattr__(self, "chords", tuple(pairs))
        if weights is not None:
            weights = [weights[i] for i in order]
            if any(int(w) < 1 for w in weights):
                raise ValueError("chord weights must be >= 1")
            if all(int(w) == 1 for w in weights):
                weights = None
            else:
                weights = tuple(int(w) for w in weights)
        object.__setattr__(self, "weights", weights)

    @property
    def n(self) -> int:
        return len(self.chords)

    @property
    def root(self) -> Chord:
        return self.chords[0]

    def weight(self, chord: Chord) -> int:
        if self.weights is None:
            return 1
        return self.weights[self.chords.index(chord)]

    @property
    def weight_map(self) -> Dict[Chord, int]:
        return {c: self.weight(c) for c in self.chords}

    @property
    def total_weight(self) -> int:
        return sum(self.weights) if self.weights is not None else self.n

    @cached_property
    def partner(self) -> Dict[int, int]:
        out = {}
        for a, b in self.chords:
            out[a] = b
            out[b] = a
        return out

    # -- text / json ------------------------------------------------------
    _PAIR = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")

    @classmethod
    def parse(cls, text: str) -> "ChordDiagram":
        body = text.strip()
        pairs = [(int(a), int(b)) for a, b in cls._PAIR.findall(body)]
        if not pairs or cls._PAIR.sub("", body).strip(" {},") != "":
            raise ValueError(f"cannot read chord diagram {text!r}")
        return cls(tuple(pairs))

    def to_text(self) -> str:
        return "".join(f"({a},{b})" for a, b in self.chords)

    def __str__(self):
        return self.to_text()

    def to_json(self) -> dict:
        out = {"n": self.n, "chords": [list(c) for c in self.chords]}
        if self.weights is not None:
            out["weights"] = list(self.weights)
        return out

    @classmethod
    def from_json(cls, obj) -> "ChordDiagram":
        chords = tuple(tuple(c) for c in obj["chords"])
        if "n" in obj and int(obj["n"]) != len(chords):
            raise ValueError("chord count does not match n")
        return cls(chords, tuple(obj["weights"]) if obj.get("weights") else None)


def standardize(chords: Iterable[Chord], weights: Optional[Dict[Chord, int]] = None) -> ChordDiagram:
    """Renumber endpoints to ``1..2k`` keeping their relative order."""
    chords = list(chords)
    points = sorted(p for c in chords for p in c)
    rank = {p: i + 1 for i, p in enumerate(points)}
    new = [(rank[a], rank[b]) for a, b in chords]
    ws = None
    if weights is not None:
        ws = tuple(weights.get(c, 1) for c in chords)
    return ChordDiagram(tuple(new), ws)


# ---------------------------------------------------------------------------
# crossing structure


def crosses(c: Chord, d: Chord) -> bool:
    (a1, b1), (a2, b2) = c, d
    return a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1


def components(chords: Iterable[Chord]) -> List[List[Chord]]:
    """Connected components of the intersection graph, ordered by first point."""
    chords = sorted(chords)
    parent = list(range(len(chords)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in itertools.combinations(range(len(chords)), 2):
        if crosses(chords[i], chords[j]):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups: Dict[int, List[Chord]] = {}
    for i, c in enumerate(chords):
        groups.setdefault(find(i), []).append(c)
    return sorted(groups.values(), key=lambda g: g[0][0])


def is_connected(C) -> bool:
    chords = C.chords if isinstance(C, ChordDiagram) else list(C)
    return len(components(chords)) == 1


def is_decomposable(C: ChordDiagram) -> bool:
    """True when the diagram is a concatenation of two nonempty diagrams."""
    for p in range(1, 2 * C.n):
        if all(not (a <= p < b) for a, b in C.chords):
            return True
    return False


def is_noncrossing(C: ChordDiagram) -> bool:
    return not any(crosses(c, d) for c, d in itertools.combinations(C.chords, 2))


def is_permutation(C: ChordDiagram) -> bool:
    return all(a <= C.n for a, _ in C.chords)


def determining_permutation(C: ChordDiagram) -> Tuple[int, ...]:
    """Sinks read left to right, each labelled by the rank of its source."""
    if not is_permutation(C):
        raise ValueError("not a permutation diagram")
    by_sink = sorted(C.chords, key=lambda c: c[1])
    return tuple(a for a, _ in by_sink)


def contains_pattern(perm: Sequence[int], pattern: Sequence[int]) -> bool:
    k = len(pattern)
    for idx in itertools.combinations(range(len(perm)), k):
        vals = [perm[i] for i in idx]
        if all((vals[i] < vals[j]) == (pattern[i] < pattern[j])
               for i in range(k) for j in range(i + 1, k)):
            return True
    return False


def is_terminal(chord: Chord, chords: Iterable[Chord]) -> bool:
    """No chord crosses ``chord`` on the right."""
    a, b = chord
    return not any(a < a2 < b < b2 for a2, b2 in chords)


def terminal_chords(C) -> List[Chord]:
    chords = C.chords if isinstance(C, ChordDiagram) else list(C)
    return [c for c in chords if is_terminal(c, chords)]


def is_one_terminal(C: ChordDiagram) -> bool:
    return is_connected(C) and len(terminal_chords(C)) == 1


def classify(C: ChordDiagram) -> Dict[str, bool]:
    perm = is_permutation(C)
    connected = is_connected(C)
    return {
        "connected": connected,
        "decomposable": is_decomposable(C),
        "noncrossing": is_noncrossing(C),
        "permutation": perm,
        "avoids213": perm and not contains_pattern(determining_permutation(C), (2, 1, 3)),
        "oneTerminal": connected and len(terminal_chords(C)) == 1,
    }


# ---------------------------------------------------------------------------
# intersection order


@dataclass(frozen=True)
class IntersectionLabels:
    label: Dict[Chord, int]
    terminals: Tuple[int, ...]

    def chord_with_label(self, i: int) -> Chord:
        for c, lab in self.label.items():
            if lab == i:
                return c
        raise KeyError(i)

    @property
    def b(self) -> int:
        return self.terminals[0]


def _label_recursively(chords: List[Chord], start: int, out: Dict[Chord, int]) -> int:
    root = min(chords)
    out[root] = start
    nxt = start + 1
    for comp in components([c for c in chords if c != root]):
        nxt = _label_recursively(comp, nxt, out)
    return nxt


def intersection_order(C) -> IntersectionLabels:
    chords = list(C.chords if isinstance(C, ChordDiagram) else C)
    if not is_connected(chords):
        raise ValueError("intersection order needs a connected diagram")
    labels: Dict[Chord, int] = {}
    _label_recursively(chords, 1, labels)
    terms = tuple(sorted(labels[c] for c in terminal_chords(chords)))
    return IntersectionLabels(labels, terms)


# ---------------------------------------------------------------------------
# insertion places


def rtips(host, part: Optional[FrozenSet[int]] = None) -> List[Tuple[int, int]]:
    """Rooted-tree insertion places as ``(vertex, slot)`` in their canonical order.

    ``slot`` ``j`` is the place before the ``j``-th child (``j = out-degree``
    means after the last child).  ``part`` restricts to an induced subtree.
    """
    verts = host.vertices
    if part is None:
        part = frozenset(range(host.size))
    out: List[Tuple[int, int]] = []

    def visit(u):
        out.append((u, 0))
        kids = [c for c in verts[u].children if c in part]
        for j, c in enumerate(kids):
            visit(c)
            out.append((u, j + 1))

    visit(min(part))
    return out


def insert_diagram(lower: Sequence[Chord], upper: Sequence[Chord], i: int):
    """Insert ``lower`` into ``upper`` at chord-diagram insertion place ``i``.

    Both inputs are standardized chord lists.  Returns the new chord list and
    the two position maps (for ``lower`` and ``upper`` endpoints).
    """
    m = len(lower)
    if not 1 <= i <= 2 * len(upper) - 1:
        raise ValueError(f"insertion place {i} out of range")

    def move_lower(p):
        return 1 if p == 1 else p + i

    def move_upper(p):
        return p + 1 if p <= i else p + 2 * m

    chords = [(move_lower(a), move_lower(b)) for a, b in lower]
    chords += [(move_upper(a), move_upper(b)) for a, b in upper]
    return chords, move_lower, move_upper


# ---------------------------------------------------------------------------
# θ : tubings of plane trees -> connected diagrams


def theta_with_map(tub: Tubing) -> Tuple[ChordDiagram, Dict[int, Chord]]:
    """``θ(τ)`` together with the vertex -> chord correspondence."""
    host = tub.host
    verts = host.vertices

    def rec(node) -> Tuple[List[Chord], Dict[int, Chord]]:
        if isinstance(node, Leaf):
            return [(1, 2)], {node.vertex: (1, 2)}
        low_chords, low_map = rec(node.lower)
        up_chords, up_map = rec(node.upper)
        up_part = node.upper.vertex_set
        u = verts[node.edge].parent
        slot = sum(1 for c in verts[u].children if c in up_part and c < node.edge)
        i = rtips(host, up_part).index((u, slot)) + 1
        chords, ml, mu_ = insert_diagram(low_chords, up_chords, i)
        vmap = {v: (ml(a), ml(b)) for v, (a, b) in low_map.items()}
        vmap.update({v: (mu_(a), mu_(b)) for v, (a, b) in up_map.items()})
        return chords, vmap

    chords, vmap = rec(tub.node)
    weights = {vmap[v.id]: v.decoration.weight for v in verts}
    C = ChordDiagram(tuple(chords), tuple(weights[c] for c in chords))
    return C, vmap


def theta(tub: Tubing) -> ChordDiagram:
    return theta_with_map(tub)[0]


# ---------------------------------------------------------------------------
# μ : connected diagrams -> tubings


def _decompose(chords: Sequence[Chord]):
    """Split off the root: returns (C' chords, C'' chords, insertion index i)."""
    root = min(chords)
    rest = [c for c in chords if c != root]
    first = min(p for c in rest for p in c)
    comps = components(rest)
    outer = next(g for g in comps if any(first in c for c in g))
    lower = [root] + [c for c in rest if c not in outer]
    eta = min([root[1]] + [p for c in lower[1:] for p in c])
    i = sum(1 for c in outer for p in c if p < eta)
    return lower, outer, i


def _from_nested(nested, decorate):
    """Nested ``[tag, [children]]`` -> (PlaneTree, tag -> new preorder id)."""
    ids = {}

    def build(nd):
        tag, kids = nd
        ids[tag] = len(ids)
        return PlaneTree(decorate(tag), tuple(build(k) for k in kids))

    return build(nested), ids


def _to_nested(tree: PlaneTree, tag_of):
    counter = itertools.count()

    def walk(node):
        tag = tag_of(next(counter))
        return [tag, [walk(c) for c in node.children]]

    return walk(tree)


def mu_with_map(C) -> Tuple[Tubing, Dict[Chord, int]]:
    """``μ(C)`` as a tubing of a plane tree, plus the chord -> vertex map."""
    if isinstance(C, ChordDiagram):
        chords, wmap = list(C.chords), C.weight_map
    else:
        chords, wmap = list(C), {}
    if not is_connected(chords):
        raise ValueError("μ needs a connected diagram")

    def rec(chs):
        if len(chs) == 1:
            (c,) = chs
            tree = PlaneTree(Decoration(wmap.get(c, 1)))
            return Tubing(tree, Leaf(0)), {c: 0}
        lower, upper, i = _decompose(chs)
        low_tub, low_map = rec(lower)
        up_tub, up_map = rec(upper)
        u, slot = rtips(up_tub.host)[i - 1]
        low_nested = _to_nested(low_tub.host, lambda k: ("L", k))
        up_nested = _to_nested(up_tub.host, lambda k: ("U", k))

        def graft(nd):
            tag, kids = nd
            kids = [graft(k) for k in kids]
            if tag == ("U", u):
                kids.insert(slot, low_nested)
            return [tag, kids]

        decs = {("L", v.id): v.decoration for v in low_tub.host.vertices}
        decs.update({("U", v.id): v.decoration for v in up_tub.host.vertices})
        tree, ids = _from_nested(graft(up_nested), decs.__getitem__)

        def relabel(nd, side):
            if isinstance(nd, Leaf):
                return Leaf(ids[(side, nd.vertex)])
            return Split(ids[(side, nd.edge)], relabel(nd.lower, side), relabel(nd.upper, side))

        node = Split(ids[("L", 0)], relabel(low_tub.node, "L"), relabel(up_tub.node, "U"))
        cmap = {c: ids[("L", v)] for c, v in low_map.items()}
        cmap.update({c: ids[("U", v)] for c, v in up_map.items()})
        return Tubing(tree, node), cmap

    return rec(chords)


def mu(C) -> Tuple[PlaneTree, Tubing]:
    tub, _ = mu_with_map(C)
    return tub.host, tub


# ---------------------------------------------------------------------------
# ν via the auxiliary binary tree


def aux_binary_tree(C):
    """Nested ``("leaf", chord)`` / ``("node", left, right)`` built by ``T1 ∘_k T2``."""
    chords = list(C.chords if isinstance(C, ChordDiagram) else C)
    if not is_connected(chords):
        raise ValueError("ν needs a connected diagram")

    def build(chs):
        if len(chs) == 1:
            return ("leaf", chs[0])
        lower, upper, k = _decompose(chs)
        return _graft_binary(build(lower), k, build(upper))

    return build(chords)


def _graft_binary(t1, k: int, t2):
    counter = [0]

    def walk(nd):
        counter[0] += 1
        if counter[0] == k:
            return ("node", t1, nd)
        if nd[0] == "leaf":
            return nd
        left = walk(nd[1])
        right = walk(nd[2])
        return ("node", left, right)

    out = walk(t2)
    if counter[0] < k:
        raise ValueError("insertion index exceeds tree size")
    return out


def nu(C) -> Dict[Chord, int]:
    """``ν(a)``: length of the up-and-left path from the leaf of ``a``."""
    out: Dict[Chord, int] = {}

    def walk(nd, run):
        if nd[0] == "leaf":
            out[nd[1]] = run
            return
        walk(nd[1], 0)
        walk(nd[2], run + 1)

    walk(aux_binary_tree(C), 0)
    return out


# ---------------------------------------------------------------------------
# checks tying tubings to chord statistics


def terminal_correspondence_report(tub: Tubing) -> List[str]:
    C, vmap = theta_with_map(tub)
    labels = intersection_order(C)
    chord_to_vertex = {c: v for v, c in vmap.items()}
    problems = []
    terms = labels.terminals
    first = labels.chord_with_label(terms[0])
    if chord_to_vertex[first] != 0:
        problems.append("first terminal chord is not the root vertex")
    if first != max(C.chords, key=lambda c: c[1]):
        problems.append("first terminal chord is not the rightmost-ending chord")
    term_vertices = {chord_to_vertex[labels.chord_with_label(t)] for t in terms}
    tube_roots = {0} | {min(t) for t in tub.tubes if len(t) >= 2}
    if term_vertices != tube_roots:
        problems.append("terminal chords do not match tube roots")
    if tub.b != terms[0]:
        problems.append(f"b(τ)={tub.b} but t1={terms[0]}")
    for prev, cur in zip(terms, terms[1:]):
        v = chord_to_vertex[labels.chord_with_label(cur)]
        if tub.b_values[v] - 1 != cur - prev:
            problems.append(f"difference law fails at t={cur}")
    return problems


def terminal_correspondence_check(tub: Tubing) -> bool:
    return not terminal_correspondence_report(tub)


# ---------------------------------------------------------------------------
# enumeration


def perfect_matchings(n: int) -> List[Tuple[Chord, ...]]:
    out: List[Tuple[Chord, ...]] = []

    def rec(points, acc):
        if not points:
            out.append(tuple(acc))
            return
        a = points[0]
        for j in range(1, len(points)):
            b = points[j]
            rec(points[1:j] + points[j + 1:], acc + [(a, b)])

    rec(list(range(1, 2 * n + 1)), [])
    return out


@lru_cache(maxsize=None)
def _connected(n: int) -> Tuple[ChordDiagram, ...]:
    return tuple(ChordDiagram(m) for m in perfect_matchings(n) if is_connected(m))


def enumerate_connected_diagrams(n: int) -> List[ChordDiagram]:
    if not 1 <= n <= 7:
        raise ValueError("n must be between 1 and 7")
    return list(_connected(n))


def enumerate_diagrams(n: int) -> List[ChordDiagram]:
    return [ChordDiagram(m) for m in perfect_matchings(n)]


# ---------------------------------------------------------------------------
# chord-diagram expansion of the Green function


def chord_factor(weight: int, nu_value: int, s, form: str = "binomial"):
    s = Fraction(s)
    if form == "binomial":
        return binomial(1 + weight * s, nu_value)
    if form == "signed":
        return (-1) ** nu_value * binomial(weight * (-s) + nu_value - 2, nu_value)
    raise ValueError(f"unknown form {form!r}")


def chord_monomial(C: ChordDiagram, table: MellinTable, labels: Optional[IntersectionLabels] = None):
    """``prod_{i>=2} c[t_i - t_{i-1}, w(t_i)] * prod_{non-terminal} c[0, w]``."""
    labels = labels or intersection_order(C)
    terms = labels.terminals
    total = Fraction(1)
    for prev, cur in zip(terms, terms[1:]):
        chord = labels.chord_with_label(cur)
        total = total * table.coeff(cur - prev, Decoration(C.weight(chord)))
    term_set = set(terms)
    for chord, lab in labels.label.items():
        if lab not in term_set:
            total = total * table.coeff(0, Decoration(C.weight(chord)))
    return total


def diagram_contribution(C: ChordDiagram, s, table: MellinTable, form: str = "binomial") -> LPoly:
    """Coefficient of ``x^{‖C‖}`` contributed by one weighted diagram."""
    labels = intersection_order(C)
    nus = nu(C)
    pref = Fraction(1)
    for chord in C.chords:
        pref = pref * chord_factor(C.weight(chord), nus[chord], s, form)
        if pref == 0:
            return LPoly()
    mono = chord_monomial(C, table, labels)
    t1 = labels.terminals[0]
    root_dec = Decoration(C.weight(labels.chord_with_label(t1)))
    coeffs = [Fraction(0)] * (t1 + 1)
    for k in range(1, t1 + 1):
        coeffs[k] = pref * mono * table.coeff(t1 - k, root_dec) * Fraction(1, factorial(k))
    return LPoly(coeffs)


def weighted_diagrams(order: int, weights: Sequence[int]):
    """Connected diagrams with chord weights from ``weights`` and total weight <= order."""
    weights = sorted(set(weights))
    for n in range(1, order + 1):
        if n * weights[0] > order:
            break
        for C in enumerate_connected_diagrams(n):
            for ws in itertools.product(weights, repeat=n):
                if sum(ws) <= order:
                    yield ChordDiagram(C.chords, ws)


def chord_expansion(s, table: MellinTable, order: int, form: str = "binomial"):
    """The Green function as a sum over weighted connected chord diagrams."""
    from .dse import GreenSeries

    s = Fraction(s)
    if s.denominator != 1 or s >= 0:
        raise ValueError("the chord expansion needs a negative integer s")
    if len(table.types) != 1:
        raise ValueError("single-type Mellin table required")
    table.require(order)
    coeffs = [LPoly([1])] + [LPoly() for _ in range(order)]
    for C in weighted_diagrams(order, [d.weight for d in table.decorations]):
        coeffs[C.total_weight] = coeffs[C.total_weight] + diagram_contribution(C, s, table, form)
    return GreenSeries.from_list(coeffs, order)


def tubing_contribution(tub: Tubing, s, table: MellinTable) -> LPoly:
    """Plane-tree term of one tubing: binomial vertex factors times ``φ_L(τ)``."""
    from .feynman import tubing_feynman_rules

    s = Fraction(s)
    pref = Fraction(1)
    for v in tub.host.vertices:
        pref = pref * binomial(1 + s * v.decoration.weight, len(v.children))
    if pref == 0:
        return LPoly()
    return tubing_feynman_rules(tub, table) * pref


# ---------------------------------------------------------------------------
# κ : 1-terminal diagrams -> decreasing trees


@dataclass(frozen=True)
class LabelledTree:
    label: int
    children: Tuple["LabelledTree", ...] = ()

    def size(self) -> int:
        return 1 + sum(c.size() for c in self.children)

    def is_decreasing(self) -> bool:
        return all(c.label < self.label and c.is_decreasing() for c in self.children)

    def is_corolla(self) -> bool:
        return all(not c.children for c in self.children)

    def __str__(self):
        if not self.children:
            return str(self.label)
        return f"{self.label}(" + ",".join(map(str, self.children)) + ")"


def sink_groups(C: ChordDiagram) -> List[List[int]]:
    """For chord ``i`` (1-based, by source) the chord indices of its sink group."""
    index_of = {c: i + 1 for i, c in enumerate(C.chords)}
    sink_at = {b: (a, b) for a, b in C.chords}
    groups = []
    for i, (a, b) in enumerate(C.chords, start=1):
        group = []
        p = a + 1
        while p in sink_at:
            chord = sink_at[p]
            if chord != (a, b):
                group.append(index_of[chord])
            p += 1
        groups.append(group)
    return groups


def kappa(C: ChordDiagram) -> LabelledTree:
    if not is_one_terminal(C):
        raise ValueError("κ needs a 1-terminal diagram")
    groups = sink_groups(C)
    children_of = {i: g for i, g in enumerate(groups, start=1)}
    all_children = [c for g in groups for c in g]
    roots = set(range(1, C.n + 1)) - set(all_children)
    if len(roots) != 1 or len(all_children) != C.n - 1:
        raise ValueError("sink groups do not form a tree")

    def build(i):
        return LabelledTree(i, tuple(build(c) for c in children_of[i]))

    return build(roots.pop())


def decreasing_trees(n: int) -> List[LabelledTree]:
    """All plane trees on labels ``1..n`` with children smaller than parents."""
    trees = [LabelledTree(n)]
    for label in range(n - 1, 0, -1):
        grown = []
        for t in trees:
            grown.extend(_attach_everywhere(t, label))
        trees = grown
    return trees


def _attach_everywhere(t: LabelledTree, label: int) -> List[LabelledTree]:
    out = []
    kids = list(t.children)
    for pos in range(len(kids) + 1):
        out.append(LabelledTree(t.label, tuple(kids[:pos] + [LabelledTree(label)] + kids[pos:])))
    for j, child in enumerate(kids):
        for new_child in _attach_everywhere(child, label):
            out.append(LabelledTree(t.label, tuple(kids[:j] + [new_child] + kids[j + 1:])))
    return out


# ---------------------------------------------------------------------------
# special classes


def ladder_tubings(n: int) -> List[Tubing]:
    from .trees import ladder

    return enumerate_tubings(ladder(n))


def special_class_report(n: int) -> Dict[str, bool]:
    if not 1 <= n <= 7:
        raise ValueError("n must be between 1 and 7")
    connected = enumerate_connected_diagrams(n)
    ladder_image = {theta(t) for t in ladder_tubings(n)}
    perm213 = {C for C in connected
               if is_permutation(C) and not contains_pattern(determining_permutation(C), (2, 1, 3))}
    leaf_image = set()
    leaf_count = 0
    for t in enumerate_trees(n, [Decoration(1)], plane=True):
        for tub in enumerate_tubings(t):
            if is_leaf_tubing(tub):
                leaf_count += 1
                leaf_image.add(theta(tub))
    one_terminal = {C for C in connected if len(terminal_chords(C)) == 1}
    return {
        "ladders_are_213_avoiding_permutation": ladder_image == perm213,
        "leaf_tubings_are_one_terminal": leaf_image == one_terminal and leaf_count == len(leaf_image),
    }


def special_class_check(n: int) -> bool:
    return all(special_class_report(n).values())


# ---------------------------------------------------------------------------
# non-crossing diagrams with an outer chord and plane trees


def yukawa_tree(C: ChordDiagram) -> PlaneTree:
    """Nesting tree of a non-crossing diagram whose root chord is ``(1, 2n)``."""
    if not is_noncrossing(C) or C.root != (1, 2 * C.n):
        raise ValueError("needs a non-crossing diagram with outer chord (1, 2n)")

    def children(chord):
        a, b = chord
        inside = [c for c in C.chords if a < c[0] and c[1] < b]
        outermost = [c for c in inside if not any(d[0] < c[0] and c[1] < d[1] for d in inside)]
        return sorted(outermost)

    def build(chord):
        return PlaneTree(Decoration(C.weight(chord)), tuple(build(c) for c in children(chord)))

    return build(C.root)


def yukawa_diagrams(n: int) -> List[ChordDiagram]:
    return [C for C in enumerate_diagrams(n)
            if C.root == (1, 2 * n) and is_noncrossing(C) and not is_decomposable(C)]
