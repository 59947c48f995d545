"""Line graphs of trees and the graph-associahedron notion of tubing.

A line-graph vertex is named by the tree edge it comes from, and tree edges
are named by their child vertex id.  With that convention the map from binary
tubings to maximal A-tubings only has to relabel tubes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .tubings import Leaf, Split, Tubing, is_valid_tubing

Tube = FrozenSet[int]

MAX_VERTICES = 8


@dataclass(frozen=True)
class SimpleGraph:
    vertices: Tuple[int, ...]
    edges: FrozenSet[FrozenSet[int]] = field(default_factory=frozenset)

    def __post_init__(self):
        verts = tuple(sorted(set(int(v) for v in self.vertices)))
        edges = frozenset(frozenset(int(x) for x in e) for e in self.edges)
        for e in edges:
            if len(e) != 2 or not e <= set(verts):
                raise ValueError(f"bad edge {sorted(e)}")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[Sequence[int]]) -> "SimpleGraph":
        return cls(tuple(vertices), frozenset(frozenset(e) for e in edges))

    @cached_property
    def adjacency(self) -> Dict[int, FrozenSet[int]]:
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(n) for v, n in adj.items()}

    def induces_connected(self, part: Iterable[int]) -> bool:
        part = set(part)
        if not part:
            return False
        start = next(iter(part))
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in self.adjacency[u]:
                if w in part and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == part

    def is_connected(self) -> bool:
        return not self.vertices or self.induces_connected(self.vertices)

    def to_json(self) -> dict:
        return {
            "n": len(self.vertices),
            "vertices": list(self.vertices),
            "edges": sorted(sorted(e) for e in self.edges),
        }

    @classmethod
    def from_json(cls, obj) -> "SimpleGraph":
        verts = obj.get("vertices", range(1, int(obj["n"]) + 1))
        return cls.from_edges(verts, obj.get("edges", []))


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(range(1, n + 1), itertools.combinations(range(1, n + 1), 2))


def line_graph(t) -> SimpleGraph:
    """Vertices are the edge ids of ``t``; two are adjacent when the edges meet."""
    verts = t.vertices
    edges = []
    for e, f in itertools.combinations(t.edges, 2):
        pe, pf = verts[e].parent, verts[f].parent
        if pe == pf or pe == f or pf == e:
            edges.append((e, f))
    return SimpleGraph.from_edges(t.edges, edges)


# ---------------------------------------------------------------------------
# A-tubings


def _compatible(G: SimpleGraph, s: Tube, t: Tube) -> bool:
    if s <= t or t <= s:
        return True
    if s & t:
        return False
    # disjoint: allowed only when the union is not itself a tube
    return not G.induces_connected(s | t)


def is_valid_atubing(G: SimpleGraph, tubes: Iterable[Iterable[int]]) -> bool:
    tubes = [frozenset(t) for t in tubes]
    full = frozenset(G.vertices)
    if len(set(tubes)) != len(tubes):
        return False
    for t in tubes:
        if not t or t == full or not t <= full or not G.induces_connected(t):
            return False
    return all(_compatible(G, s, t) for s, t in itertools.combinations(tubes, 2))


def all_tubes(G: SimpleGraph) -> List[Tube]:
    """Every proper connected vertex subset, smallest first."""
    if len(G.vertices) > MAX_VERTICES:
        raise ValueError(f"graphs with more than {MAX_VERTICES} vertices are not supported")
    out = []
    for k in range(1, len(G.vertices)):
        for combo in itertools.combinations(G.vertices, k):
            if G.induces_connected(combo):
                out.append(frozenset(combo))
    return out


def is_maximal_atubing(G: SimpleGraph, tubes: Iterable[Iterable[int]]) -> bool:
    tubes = [frozenset(t) for t in tubes]
    if not is_valid_atubing(G, tubes):
        return False
    have = set(tubes)
    for cand in all_tubes(G):
        if cand not in have and all(_compatible(G, cand, t) for t in tubes):
            return False
    return True


def maximal_atubings(G: SimpleGraph) -> List[Tuple[Tube, ...]]:
    """All maximal A-tubings, as maximal cliques of the tube compatibility graph."""
    tubes = all_tubes(G)
    index = range(len(tubes))
    nbrs = {i: {j for j in index if j != i and _compatible(G, tubes[i], tubes[j])} for i in index}
    found: List[Tuple[Tube, ...]] = []

    # Bron-Kerbosch with pivoting
    def expand(r, p, x):
        if not p and not x:
            found.append(tuple(sorted((tubes[i] for i in r), key=_tube_key)))
            return
        pivot = max(p | x, key=lambda u: len(nbrs[u] & p))
        for v in sorted(p - nbrs[pivot]):
            expand(r | {v}, p & nbrs[v], x & nbrs[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(index), set())
    return sorted(found, key=lambda a: [_tube_key(t) for t in a])


def _tube_key(t: Tube):
    return (len(t), sorted(t))


def atubing_to_json(tubes: Iterable[Tube]) -> List[List[int]]:
    return [sorted(t) for t in sorted(tubes, key=_tube_key)]


# ---------------------------------------------------------------------------
# the L map and its inverse


def l_map(tub: Tubing) -> Tuple[Tube, ...]:
    """Drop singletons and the outer tube; each tube becomes its set of internal edges."""
    n = tub.host.size
    out = []
    for tube in tub.tubes:
        if 1 < len(tube) < n:
            root = min(tube)
            out.append(frozenset(v for v in tube if v != root))
    return tuple(sorted(out, key=_tube_key))


def l_inverse(t, tubes: Iterable[Iterable[int]]) -> Tubing:
    """Rebuild the binary tubing of ``t`` from a maximal A-tubing of its line graph."""
    G = line_graph(t)
    tubes = [frozenset(x) for x in tubes]
    if not is_maximal_atubing(G, tubes):
        raise ValueError("not a maximal A-tubing of the line graph")
    verts = t.vertices
    vertex_tubes = {frozenset(range(t.size))}
    vertex_tubes |= {frozenset((v,)) for v in range(t.size)}
    for tube in tubes:
        vertex_tubes.add(frozenset(tube) | {verts[e].parent for e in tube})

    def rec(part: FrozenSet[int]):
        if len(part) == 1:
            return Leaf(next(iter(part)))
        inside = [s for s in vertex_tubes if s < part]
        maximal = [s for s in inside if not any(s < o for o in inside)]
        if len(maximal) != 2 or maximal[0] | maximal[1] != part or maximal[0] & maximal[1]:
            raise ValueError("tube set does not split into two parts")
        root = min(part)
        upper, lower = sorted(maximal, key=lambda s: root not in s)
        return Split(min(lower), rec(lower), rec(upper))

    node = rec(frozenset(range(t.size)))
    if not is_valid_tubing(t, node):
        raise ValueError("tube set is not a binary tubing")
    return Tubing(t, node)
