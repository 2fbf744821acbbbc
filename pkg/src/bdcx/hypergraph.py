"""Hypergraphs, their minors and independence complexes; the bounded degree complex.

Deletion and contraction follow the usual minor operations.  Contracting a
looped vertex would create the empty edge; such an edge is dropped and the
result is flagged ``degenerate`` (its independence complex is void).
"""

from __future__ import annotations

from itertools import combinations
from typing import Hashable, Iterable

from .complex import SimplicialComplex
from .errors import PreconditionError, UnknownVertex
from .graph import DegreeBound, Graph, check_bound


class Hypergraph:
    __slots__ = ("vertices", "edges", "degenerate", "_pos")

    def __init__(self, vertices: Iterable[Hashable], edges: Iterable[Iterable[Hashable]], degenerate: bool = False):
        self.vertices = tuple(dict.fromkeys(vertices))
        self._pos = {v: i for i, v in enumerate(self.vertices)}
        family = set()
        for e in edges:
            e = frozenset(e)
            if not e:
                raise PreconditionError("empty edge; use degenerate=True instead")
            missing = e - self._pos.keys()
            if missing:
                raise UnknownVertex(next(iter(missing)))
            family.add(e)
        self.edges = tuple(sorted(family, key=self._edge_key))
        self.degenerate = degenerate

    def _edge_key(self, e: frozenset) -> tuple:
        return (len(e), sorted(self._pos[x] for x in e))

    def _check(self, v) -> None:
        if v not in self._pos:
            raise UnknownVertex(v)

    @property
    def looped(self) -> set:
        return {next(iter(e)) for e in self.edges if len(e) == 1}

    def edges_through(self, v) -> list[frozenset]:
        self._check(v)
        return [e for e in self.edges if v in e]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (
            set(self.vertices) == set(other.vertices)
            and set(self.edges) == set(other.edges)
            and self.degenerate == other.degenerate
        )

    def __hash__(self) -> int:
        return hash((frozenset(self.vertices), frozenset(self.edges), self.degenerate))

    def __repr__(self) -> str:
        es = ", ".join("{" + ", ".join(repr(x) for x in sorted(e, key=self._pos.get)) + "}" for e in self.edges)
        flag = ", degenerate" if self.degenerate else ""
        return f"Hypergraph({len(self.vertices)} vertices, [{es}]{flag})"


def minimal_reduction(h: Hypergraph) -> Hypergraph:
    """Keep only the inclusion-minimal edges."""
    kept = [e for e in h.edges if not any(f < e for f in h.edges)]
    return Hypergraph(h.vertices, kept, h.degenerate)


def delete_vertex(h: Hypergraph, v) -> Hypergraph:
    h._check(v)
    return Hypergraph(
        [x for x in h.vertices if x != v],
        [e for e in h.edges if v not in e],
        h.degenerate,
    )


def contract_vertex(h: Hypergraph, v) -> Hypergraph:
    h._check(v)
    struck = [e - {v} for e in h.edges]
    return Hypergraph(
        [x for x in h.vertices if x != v],
        [e for e in struck if e],
        h.degenerate or any(not e for e in struck),
    )


def disjoint_union(h1: Hypergraph, h2: Hypergraph) -> Hypergraph:
    if set(h1.vertices) & set(h2.vertices):
        raise PreconditionError("hypergraphs are not vertex-disjoint")
    return Hypergraph(h1.vertices + h2.vertices, h1.edges + h2.edges, h1.degenerate or h2.degenerate)


def independence_complex(h: Hypergraph) -> SimplicialComplex:
    """Complex of vertex sets containing no edge; its ground set is the non-looped vertices."""
    if h.degenerate:
        return SimplicialComplex.void()
    loops = h.looped
    ground = [v for v in h.vertices if v not in loops]
    pos = {v: i for i, v in enumerate(ground)}
    # edges meeting a looped vertex can never lie inside a face
    masks = [sum(1 << pos[x] for x in e) for e in h.edges if not e & loops]
    through = [[m for m in masks if m >> i & 1] for i in range(len(ground))]

    def addable(face: int, i: int) -> bool:
        grown = face | 1 << i
        return all(m & ~grown for m in through[i])

    facets = []

    def rec(i: int, face: int) -> None:
        if i == len(ground):
            if all(face >> j & 1 or not addable(face, j) for j in range(len(ground))):
                facets.append(face)
            return
        if addable(face, i):
            rec(i + 1, face | 1 << i)
        rec(i + 1, face)

    rec(0, 0)
    return SimplicialComplex(ground, facets)


def lambda_hypergraph(g: Graph, lam: DegreeBound) -> Hypergraph:
    """Hypergraph on E(G) whose edges are the (λ(v)+1)-subsets of each E_v."""
    check_bound(g, lam)
    witnesses: dict[frozenset, list] = {}
    for v in g.vertices:
        for alpha in combinations(g.incident(v), lam[v] + 1):
            witnesses.setdefault(frozenset(alpha), []).append(v)
    if all(k > 0 for k in lam.values()):
        # with positive bounds each edge sits inside exactly one E_v
        for alpha, ws in witnesses.items():
            assert len(ws) == 1, (alpha, ws)
    return Hypergraph(g.edges, witnesses)


def edge_witnesses(g: Graph, lam: DegreeBound) -> dict[frozenset, list]:
    """Map each edge of L(G, λ) to the vertices v with the edge inside E_v."""
    incident = {v: set(g.incident(v)) for v in g.vertices}
    return {
        alpha: [v for v in g.vertices if alpha <= incident[v] and len(alpha) == lam[v] + 1]
        for alpha in lambda_hypergraph(g, lam).edges
    }


def bd_complex(g: Graph, lam: DegreeBound) -> SimplicialComplex:
    """Bounded degree complex: edge sets with at most λ(v) edges at each vertex v.

    Faces are enumerated by backtracking with per-vertex residual capacities.
    Edges touching a zero-bound vertex are excluded from the ground set.
    """
    check_bound(g, lam)
    ground = [e for e in g.edges if lam[e[0]] > 0 and lam[e[1]] > 0]
    cap = dict(lam)
    facets = []

    def maximal(face: int) -> bool:
        for j, (u, v) in enumerate(ground):
            if not face >> j & 1 and cap[u] and cap[v]:
                return False
        return True

    def rec(i: int, face: int) -> None:
        if i == len(ground):
            if maximal(face):
                facets.append(face)
            return
        u, v = ground[i]
        if cap[u] and cap[v]:
            cap[u] -= 1
            cap[v] -= 1
            rec(i + 1, face | 1 << i)
            cap[u] += 1
            cap[v] += 1
        rec(i + 1, face)

    rec(0, 0)
    return SimplicialComplex(ground, facets)


def is_bd_face(g: Graph, lam: DegreeBound, sigma: Iterable) -> bool:
    """Direct membership test |E_v ∩ σ| ≤ λ(v) for all v."""
    sigma = set(sigma)
    if not sigma <= set(g.edges):
        return False
    return all(len(sigma & set(g.incident(v))) <= lam[v] for v in g.vertices)

