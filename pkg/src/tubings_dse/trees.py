"""Decorated rooted trees, plane and non-plane.

Vertices are identified by their position in a preorder walk (root = 0).
An edge is identified by the id of its lower (child) vertex, so edge ids
run over ``1 .. n-1``.  For a :class:`RootedTree` the walk follows the
canonical child order, which makes ids stable under canonicalization of
already-canonical input.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial, prod
from typing import Iterable, List, Optional, Sequence, Tuple

DEFAULT_TYPE = "a"


@dataclass(frozen=True)
class Decoration:
    weight: int = 1
    type_tag: str = DEFAULT_TYPE

    def __post_init__(self):
        if not isinstance(self.weight, int) or self.weight < 1:
            raise ValueError(f"vertex weight must be an integer >= 1, got {self.weight!r}")
        if not self.type_tag or not str(self.type_tag).isidentifier():
            raise ValueError(f"bad type tag {self.type_tag!r}")

    @property
    def key(self):
        return (self.type_tag, self.weight)

    def __str__(self):
        if self.type_tag == DEFAULT_TYPE:
            return str(self.weight)
        return f"{self.weight}:{self.type_tag}"


@dataclass(frozen=True)
class VertexInfo:
    id: int
    decoration: Decoration
    parent: Optional[int]
    children: Tuple[int, ...]
    depth: int


class _TreeBase:
    """Shared read-only behaviour of plane and non-plane trees."""

    decoration: Decoration
    children: tuple

    @cached_property
    def key(self):
        return (self.decoration.key, tuple(c.key for c in self.children))

    @cached_property
    def size(self) -> int:
        return 1 + sum(c.size for c in self.children)

    @cached_property
    def weight(self) -> int:
        return self.decoration.weight + sum(c.weight for c in self.children)

    @property
    def out_degree(self) -> int:
        return len(self.children)

    @cached_property
    def vertices(self) -> Tuple[VertexInfo, ...]:
        """Preorder vertex table; ``vertices[i].id == i``."""
        out: List[VertexInfo] = []

        def walk(node, parent, depth):
            vid = len(out)
            out.append(None)  # placeholder, children ids known after recursion
            kids = []
            for c in node.children:
                kids.append(len(out))
                walk(c, vid, depth + 1)
            out[vid] = VertexInfo(vid, node.decoration, parent, tuple(kids), depth)

        walk(self, None, 0)
        return tuple(out)

    @cached_property
    def subtree_ids(self) -> Tuple[frozenset, ...]:
        """For each vertex id, the ids of its descendants (inclusive)."""
        verts = self.vertices
        sets: List[frozenset] = [frozenset()] * len(verts)
        for v in reversed(verts):
            s = {v.id}
            for c in v.children:
                s |= sets[c]
            sets[v.id] = frozenset(s)
        return tuple(sets)

    def subtree(self, vid: int):
        """The node object rooted at vertex ``vid``."""
        node = self
        target = vid
        # descend by preorder offsets
        while target:
            target -= 1
            for c in node.children:
                if target < c.size:
                    node = c
                    break
                target -= c.size
        return node

    @property
    def edges(self) -> Tuple[int, ...]:
        return tuple(range(1, self.size))

    def to_text(self) -> str:
        head = str(self.decoration)
        if not self.children:
            return head
        return head + "(" + ",".join(c.to_text() for c in self.children) + ")"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"{type(self).__name__}({self.to_text()!r})"

    def to_json(self) -> dict:
        return {
            "weight": self.decoration.weight,
            "type": self.decoration.type_tag,
            "children": [c.to_json() for c in self.children],
        }


@dataclass(frozen=True, eq=True, repr=False)
class PlaneTree(_TreeBase):
    """Rooted tree whose children are an ordered sequence."""

    decoration: Decoration = Decoration()
    children: Tuple["PlaneTree", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))

    def __hash__(self):
        return hash(self.key)

    def __lt__(self, other):
        return self.key < other.key

    @classmethod
    def from_json(cls, obj) -> "PlaneTree":
        dec = Decoration(int(obj["weight"]), obj.get("type", DEFAULT_TYPE))
        return cls(dec, tuple(cls.from_json(c) for c in obj.get("children", ())))


@dataclass(frozen=True, eq=True, repr=False)
class RootedTree(_TreeBase):
    """Non-plane rooted tree; children are kept sorted by canonical key."""

    decoration: Decoration = Decoration()
    children: Tuple["RootedTree", ...] = ()

    def __post_init__(self):
        kids = tuple(sorted(self.children, key=lambda c: c.key))
        object.__setattr__(self, "children", kids)

    def __hash__(self):
        return hash(self.key)

    def __lt__(self, other):
        return self.key < other.key

    def as_plane(self) -> PlaneTree:
        """The plane tree with children in canonical order."""
        return PlaneTree(self.decoration, tuple(c.as_plane() for c in self.children))

    @classmethod
    def from_json(cls, obj) -> "RootedTree":
        return canonicalize(PlaneTree.from_json(obj))



# ---------------------------------------------------------------------------
# parsing


class TreeSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


def parse_tree(text: str) -> PlaneTree:
    """Read ``weight[:type][(child,child,...)]`` into a plane tree."""
    s = text.strip()
    pos = 0

    def error(msg):
        raise TreeSyntaxError(msg, s, pos)

    def parse_node() -> PlaneTree:
        nonlocal pos
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if start == pos:
            error("expected a weight")
        weight = int(s[start:pos])
        if weight < 1:
            pos = start
            error("weight must be >= 1")
        tag = DEFAULT_TYPE
        if pos < len(s) and s[pos] == ":":
            pos += 1
            tstart = pos
            while pos < len(s) and (s[pos].isalnum() or s[pos] == "_"):
                pos += 1
            tag = s[tstart:pos]
            if not tag or not tag.isidentifier():
                pos = tstart
                error("expected a type tag")
        kids = []
        if pos < len(s) and s[pos] == "(":
            pos += 1
            kids.append(parse_node())
            while pos < len(s) and s[pos] == ",":
                pos += 1
                kids.append(parse_node())
            if pos >= len(s) or s[pos] != ")":
                error("expected ',' or ')'")
            pos += 1
        return PlaneTree(Decoration(weight, tag), tuple(kids))

    s = "".join(s.split())
    tree = parse_node()
    if pos != len(s):
        error("unexpected trailing input")
    return tree


# ---------------------------------------------------------------------------
# canonical form and symmetry counts


def canonicalize(t) -> RootedTree:
    if isinstance(t, RootedTree):
        return t
    return RootedTree(t.decoration, tuple(canonicalize(c) for c in t.children))


@lru_cache(maxsize=None)
def aut_order(t: RootedTree) -> int:
    t = canonicalize(t)
    total = 1
    for child, mult in Counter(t.children).items():
        total *= factorial(mult) * aut_order(child) ** mult
    return total


def plane_embeddings(t) -> int:
    t = canonicalize(t)
    num = prod(factorial(len(v.children)) for v in t.vertices)
    return num // aut_order(t)


def decreasing_labellings(t) -> int:
    """Labellings by 1..n where every child carries a smaller label than its parent.

    Hook-length count ``n! / prod(subtree sizes)``.
    """
    sizes = [len(s) for s in t.subtree_ids]
    return factorial(t.size) // prod(sizes)


# ---------------------------------------------------------------------------
# enumeration


def default_decorations(total_weight: int, types: Sequence[str] = (DEFAULT_TYPE,)):
    return [Decoration(w, a) for a in types for w in range(1, total_weight + 1)]


def _decoration_list(decorations, total_weight):
    if decorations is None:
        decorations = default_decorations(total_weight)
    decs = sorted(set(decorations), key=lambda d: d.key)
    return [d for d in decs if d.weight <= total_weight]


def enumerate_trees(total_weight: int, decorations: Optional[Iterable[Decoration]] = None,
                    plane: bool = False) -> list:
    """All trees of the given total weight, one per isomorphism class
    (or one per plane tree when ``plane``), sorted by canonical key.

    ``decorations`` defaults to weights ``1..total_weight`` of the single
    default type.
    """
    if total_weight < 1:
        raise ValueError("total_weight must be >= 1")
    decs = _decoration_list(decorations, total_weight)
    if plane:
        return _plane_trees(tuple(decs), total_weight)
    return _rooted_trees(tuple(decs), total_weight)


def trees_up_to(total_weight: int, decorations=None, plane: bool = False) -> list:
    out = []
    for w in range(1, total_weight + 1):
        out.extend(enumerate_trees(w, decorations, plane))
    return out


@lru_cache(maxsize=None)
def _plane_trees(decs: tuple, weight: int) -> list:
    out = []
    for d in decs:
        if d.weight <= weight:
            for seq in _plane_sequences(decs, weight - d.weight):
                out.append(PlaneTree(d, seq))
    out.sort(key=lambda t: t.key)
    return out


@lru_cache(maxsize=None)
def _plane_sequences(decs: tuple, weight: int) -> list:
    if weight == 0:
        return [()]
    out = []
    for first_w in range(1, weight + 1):
        firsts = _plane_trees(decs, first_w)
        if not firsts:
            continue
        rests = _plane_sequences(decs, weight - first_w)
        for f in firsts:
            for r in rests:
                out.append((f,) + r)
    return out


@lru_cache(maxsize=None)
def _rooted_trees(decs: tuple, weight: int) -> list:
    pool = []
    for w in range(1, weight):
        pool.extend(_rooted_trees(decs, w))
    pool.sort(key=lambda t: t.key)
    pool = tuple(pool)

    @lru_cache(maxsize=None)
    def forests(remaining: int, limit: int) -> list:
        # multisets drawn from pool[:limit+1], each list nonincreasing in key
        if remaining == 0:
            return [()]
        out = []
        for i in range(min(limit, len(pool) - 1), -1, -1):
            t = pool[i]
            if t.weight <= remaining:
                for rest in forests(remaining - t.weight, i):
                    out.append((t,) + rest)
        return out

    out = []
    for d in decs:
        if d.weight <= weight:
            for f in forests(weight - d.weight, len(pool) - 1):
                out.append(RootedTree(d, f))
    out.sort(key=lambda t: t.key)
    return out


def plane_orderings(t: RootedTree) -> List[PlaneTree]:
    """Every distinct plane tree whose canonical form is ``t``."""
    t = canonicalize(t)
    child_options = [plane_orderings(c) for c in t.children]
    seen = set()
    out = []
    for perm in set(itertools.permutations(range(len(t.children)))):
        for combo in itertools.product(*(child_options[i] for i in perm)):
            p = PlaneTree(t.decoration, combo)
            if p not in seen:
                seen.add(p)
                out.append(p)
    out.sort(key=lambda p: p.key)
    return out


# ---------------------------------------------------------------------------
# edge splitting, constructors, re-rooting


def edge_split(t, e: int):
    """Cut the edge above vertex ``e``; returns ``(lower, upper)``.

    The lower part is the subtree hanging from ``e``; the upper part keeps the
    root.  Both parts have the same class as ``t``.
    """
    if not isinstance(e, int) or not 1 <= e < t.size:
        raise ValueError(f"invalid edge id {e!r} for a tree with {t.size} vertices")
    cls = type(t)
    lower = t.subtree(e)

    def rebuild(node, offset):
        kids = []
        pos = offset + 1
        for c in node.children:
            if pos == e:
                pass
            elif pos < e < pos + c.size:
                kids.append(rebuild(c, pos))
            else:
                kids.append(c)
            pos += c.size
        return cls(node.decoration, tuple(kids))

    return lower, rebuild(t, 0)


def ladder(n: int, weight: int = 1, plane: bool = True):
    cls = PlaneTree if plane else RootedTree
    node = cls(Decoration(weight))
    for _ in range(n - 1):
        node = cls(Decoration(weight), (node,))
    return node


def corolla(n: int, weight: int = 1, plane: bool = True):
    """Root with ``n - 1`` leaf children (``n`` vertices in total)."""
    cls = PlaneTree if plane else RootedTree
    return cls(Decoration(weight), tuple(cls(Decoration(weight)) for _ in range(n - 1)))


def reroot(t, vid: int) -> RootedTree:
    """The canonical tree obtained by rooting the underlying free tree at ``vid``."""
    verts = t.vertices
    adj = {v.id: set(v.children) for v in verts}
    for v in verts:
        if v.parent is not None:
            adj[v.id].add(v.parent)

    def build(u, came_from):
        return RootedTree(verts[u].decoration,
                          tuple(build(w, u) for w in adj[u] if w != came_from))

    return build(vid, None)


def rerootings(t) -> List[RootedTree]:
    return [reroot(t, v.id) for v in t.vertices]
