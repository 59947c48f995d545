"""Binary tubings of rooted trees.

A tubing is stored through its recursive construction: either a single
vertex, or a cut edge together with a tubing of the part below the edge and
a tubing of the part containing the root.  Vertex and edge ids are those of
the host tree (see :mod:`tubings_dse.trees`).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

from .mellin import MellinTable
from .rings import scalar_prod
from .trees import PlaneTree, RootedTree, canonicalize, edge_split


@dataclass(frozen=True)
class Leaf:
    vertex: int

    @property
    def root(self) -> int:
        return self.vertex

    @property
    def vertex_set(self) -> FrozenSet[int]:
        return frozenset((self.vertex,))


@dataclass(frozen=True)
class Split:
    edge: int
    lower: "Node"
    upper: "Node"

    @property
    def root(self) -> int:
        return self.upper.root

    @cached_property
    def vertex_set(self) -> FrozenSet[int]:
        return self.lower.vertex_set | self.upper.vertex_set


Node = Union[Leaf, Split]


def node_to_json(node: Node) -> dict:
    if isinstance(node, Leaf):
        return {"leaf": node.vertex}
    return {"edge": node.edge, "lower": node_to_json(node.lower), "upper": node_to_json(node.upper)}


def node_from_json(obj) -> Node:
    if "leaf" in obj:
        return Leaf(int(obj["leaf"]))
    return Split(int(obj["edge"]), node_from_json(obj["lower"]), node_from_json(obj["upper"]))


@dataclass(frozen=True)
class Tubing:
    host: object  # PlaneTree or RootedTree
    node: Node

    @property
    def n(self) -> int:
        return self.host.size

    @cached_property
    def tubes(self) -> Tuple[Tuple[int, ...], ...]:
        """All tubes as sorted vertex-id tuples, sorted by (size, ids)."""
        out = []

        def walk(nd):
            out.append(tuple(sorted(nd.vertex_set)))
            if isinstance(nd, Split):
                walk(nd.lower)
                walk(nd.upper)

        walk(self.node)
        return tuple(sorted(out, key=lambda t: (len(t), t)))

    @cached_property
    def b_values(self) -> Tuple[int, ...]:
        counts = [0] * self.host.size

        def walk(nd):
            counts[nd.root] += 1
            if isinstance(nd, Split):
                walk(nd.lower)
                walk(nd.upper)

        walk(self.node)
        return tuple(counts)

    @property
    def b(self) -> int:
        return self.b_values[0]

    def lower(self) -> "Tubing":
        """The tubing τ' of the part below the top cut (re-based on its own tree)."""
        return _rebase(self, self.node.lower)

    def upper(self) -> "Tubing":
        return _rebase(self, self.node.upper)

    def to_json(self) -> dict:
        return node_to_json(self.node)

    def __str__(self):
        return " ".join("{" + ",".join(map(str, t)) + "}" for t in self.tubes)


def _rebase(tub: Tubing, node: Node) -> Tubing:
    """View a sub-node of a tubing as a tubing of the induced plane subtree."""
    verts = sorted(node.vertex_set)
    new_id = {v: i for i, v in enumerate(verts)}
    sub = induced_subtree(tub.host, node.vertex_set)

    def relabel(nd):
        if isinstance(nd, Leaf):
            return Leaf(new_id[nd.vertex])
        return Split(new_id[nd.edge], relabel(nd.lower), relabel(nd.upper))

    return Tubing(sub, relabel(node))


def induced_subtree(host, part: FrozenSet[int]) -> PlaneTree:
    """Plane tree induced on a connected vertex set, keeping the host's child order.

    Its preorder ids are the sorted host ids of ``part``.
    """
    verts = host.vertices

    def build(u):
        return PlaneTree(verts[u].decoration, tuple(build(c) for c in verts[u].children if c in part))

    return build(min(part))


# ---------------------------------------------------------------------------
# enumeration and counting


def _parts_enumerator(host):
    verts = host.vertices
    below = host.subtree_ids
    memo: Dict[FrozenSet[int], List[Node]] = {}

    def tubings_of(part: FrozenSet[int]) -> List[Node]:
        hit = memo.get(part)
        if hit is not None:
            return hit
        if len(part) == 1:
            (v,) = part
            res: List[Node] = [Leaf(v)]
        else:
            root = min(part)
            res = []
            for e in sorted(part):
                if e == root:
                    continue
                low = part & below[e]
                up = part - low
                lows = tubings_of(low)
                ups = tubings_of(up)
                for a in lows:
                    for b in ups:
                        res.append(Split(e, a, b))
        memo[part] = res
        return res

    return tubings_of, frozenset(v.id for v in verts)


def enumerate_tubings(t) -> List[Tubing]:
    """Every binary tubing of ``t`` in depth-first edge order."""
    tubings_of, everything = _parts_enumerator(t)
    return [Tubing(t, nd) for nd in tubings_of(everything)]


@lru_cache(maxsize=None)
def _count(t: RootedTree) -> int:
    if t.size == 1:
        return 1
    total = 0
    for e in t.edges:
        low, up = edge_split(t, e)
        total += _count(low) * _count(up)
    return total


def count_tubings(t) -> int:
    """``N(t)`` by the edge recurrence, memoized on canonical subtrees."""
    return _count(canonicalize(t))


def b_statistic(tub: Tubing, v: int) -> int:
    if not 0 <= v < tub.host.size:
        raise ValueError(f"vertex {v} not in host")
    return tub.b_values[v]


def mellin_monomial(tub: Tubing, table: MellinTable):
    """``prod over non-root v of c[b(v)-1, d(v)]``."""
    verts = tub.host.vertices
    b = tub.b_values
    return scalar_prod(table.coeff(b[v.id] - 1, v.decoration) for v in verts if v.id != 0)


def mellin_monomial_recursive(tub: Tubing, table: MellinTable):
    """Same value via the split recursion ``c_{b(τ')-1, d(rt t')} c(τ') c(τ'')``."""
    verts = tub.host.vertices

    def rec(nd):
        # returns (monomial, b at the part root)
        if isinstance(nd, Leaf):
            return 1, 1
        low_c, low_b = rec(nd.lower)
        up_c, up_b = rec(nd.upper)
        factor = table.coeff(low_b - 1, verts[nd.lower.root].decoration)
        return factor * low_c * up_c, up_b + 1

    return rec(tub.node)[0]


def is_leaf_tubing(tub: Tubing) -> bool:
    def rec(nd):
        if isinstance(nd, Leaf):
            return True
        return isinstance(nd.lower, Leaf) and rec(nd.upper)

    return rec(tub.node)


def is_valid_tubing(host, node: Node) -> bool:
    """Structural check of a recursive tubing against its host."""
    below = host.subtree_ids

    def rec(nd, part):
        if isinstance(nd, Leaf):
            return part == frozenset((nd.vertex,))
        if nd.edge not in part or nd.edge == min(part):
            return False
        low = part & below[nd.edge]
        return rec(nd.lower, low) and rec(nd.upper, part - low)

    return rec(node, frozenset(range(host.size)))


def tubing_from_json(host, obj) -> Tubing:
    node = node_from_json(obj)
    if not is_valid_tubing(host, node):
        raise ValueError("not a binary tubing of the given tree")
    return Tubing(host, node)


# ---------------------------------------------------------------------------
# containment tree


@dataclass(frozen=True)
class ContainmentNode:
    tube: Tuple[int, ...]
    left: Optional["ContainmentNode"] = None
    right: Optional["ContainmentNode"] = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def leaves(self) -> int:
        return 1 if self.is_leaf else self.left.leaves() + self.right.leaves()

    def shape(self):
        """Unlabelled shape as nested pairs; ``None`` for a leaf."""
        if self.is_leaf:
            return None
        return (self.left.shape(), self.right.shape())


def containment_tree(tub: Tubing) -> ContainmentNode:
    """Full binary tree of tubes; the right child holds the root-side part."""

    def rec(nd):
        tube = tuple(sorted(nd.vertex_set))
        if isinstance(nd, Leaf):
            return ContainmentNode(tube)
        return ContainmentNode(tube, rec(nd.lower), rec(nd.upper))

    return rec(tub.node)


def random_tubing(t, rng) -> Tubing:
    """A tubing of ``t`` built by cutting a uniformly chosen edge at every step.

    Not uniform over tubings; good enough for randomized round-trip checks.
    """
    below = t.subtree_ids

    def rec(part):
        if len(part) == 1:
            return Leaf(next(iter(part)))
        root = min(part)
        e = rng.choice(sorted(v for v in part if v != root))
        low = part & below[e]
        return Split(e, rec(low), rec(part - low))

    return Tubing(t, rec(frozenset(range(t.size))))
