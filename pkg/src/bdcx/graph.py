"""Finite simple graphs with labelled vertices, plus degree-bound helpers.

A degree bound is a plain ``dict`` from vertex label to non-negative int.  It
is kept beside the graph rather than inside it, so one graph can carry many
bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping

from .errors import PreconditionError, UnknownVertex

Vertex = Hashable
Edge = tuple  # (u, v) with u declared before v
DegreeBound = Mapping[Vertex, int]


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: tuple

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[Vertex]], vertices: Iterable[Vertex] = ()) -> Graph:
        """Build a graph, declaring edge endpoints after ``vertices`` in first-seen order."""
        order: dict = {}
        for v in vertices:
            order.setdefault(v, len(order))
        pairs = []
        for e in edges:
            u, v = tuple(e)
            if u == v:
                raise PreconditionError(f"loop at {u!r}")
            order.setdefault(u, len(order))
            order.setdefault(v, len(order))
            pairs.append((u, v))
        return cls._build(tuple(order), pairs)

    @classmethod
    def _build(cls, vertices: tuple, pairs: Iterable[tuple]) -> Graph:
        pos = {v: i for i, v in enumerate(vertices)}
        seen = set()
        for u, v in pairs:
            if u not in pos or v not in pos:
                raise UnknownVertex(u if u not in pos else v)
            e = (u, v) if pos[u] < pos[v] else (v, u)
            if e in seen:
                raise PreconditionError(f"duplicate edge {e!r}")
            seen.add(e)
        edges = tuple(sorted(seen, key=lambda e: (pos[e[0]], pos[e[1]])))
        return cls(vertices, edges)

    # -- queries --------------------------------------------------------

    def position(self, v: Vertex) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise UnknownVertex(v) from None

    def edge_key(self, e: Edge) -> tuple[int, int]:
        return (self.position(e[0]), self.position(e[1]))

    def normalize(self, u: Vertex, v: Vertex) -> Edge:
        e = (u, v) if self.position(u) < self.position(v) else (v, u)
        if e not in self.edges:
            raise PreconditionError(f"{e!r} is not an edge")
        return e

    def incident(self, v: Vertex) -> list[Edge]:
        """E_v: edges containing ``v``."""
        if v not in self.vertices:
            raise UnknownVertex(v)
        return [e for e in self.edges if v in e]

    def degree(self, v: Vertex) -> int:
        return len(self.incident(v))

    def neighbors(self, v: Vertex) -> list[Vertex]:
        return [e[1] if e[0] == v else e[0] for e in self.incident(v)]

    def leaf_edges(self) -> list[tuple[Edge, Vertex]]:
        """(edge, degree-one endpoint) pairs in edge order; an isolated edge appears twice."""
        deg = {v: 0 for v in self.vertices}
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        out = []
        for e in self.edges:
            for x in e:
                if deg[x] == 1:
                    out.append((e, x))
        return out

    def components(self) -> list[Graph]:
        """Connected components that carry at least one edge."""
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            parent[find(u)] = find(v)
        groups: dict = {}
        for e in self.edges:
            groups.setdefault(find(e[0]), []).append(e)
        comps = []
        for es in groups.values():
            vs = {x for e in es for x in e}
            comps.append(Graph(tuple(v for v in self.vertices if v in vs), tuple(es)))
        return sorted(comps, key=lambda g: self.edge_key(g.edges[0]))

    def is_forest(self) -> bool:
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    # -- edits ----------------------------------------------------------

    def remove_edges(self, *edges: Edge) -> Graph:
        gone = {self.normalize(*e) for e in edges}
        return Graph(self.vertices, tuple(e for e in self.edges if e not in gone))

    def remove_vertices(self, *vs: Vertex) -> Graph:
        gone = set(vs)
        for v in gone:
            if v not in self.vertices:
                raise UnknownVertex(v)
        return Graph(
            tuple(v for v in self.vertices if v not in gone),
            tuple(e for e in self.edges if not gone & set(e)),
        )

    def __str__(self) -> str:
        return " ".join(f"{u}-{v}" for u, v in self.edges) or "(no edges)"


def check_bound(g: Graph, lam: DegreeBound) -> None:
    if set(lam) != set(g.vertices):
        raise PreconditionError("degree bound must be defined on exactly the vertices of the graph")
    for v, k in lam.items():
        if not isinstance(k, int) or k < 0:
            raise PreconditionError(f"degree bound at {v!r} must be a non-negative integer, got {k!r}")


def constant_bound(g: Graph, k: int = 1) -> dict:
    return {v: k for v in g.vertices}


def decrement(lam: DegreeBound, at: Iterable[Vertex]) -> dict:
    """Copy of ``lam`` lowered by one at each vertex of ``at``."""
    out = dict(lam)
    for x in at:
        out[x] -= 1
    return out


def restrict(lam: DegreeBound, g: Graph) -> dict:
    return {v: lam[v] for v in g.vertices}


def strip_zero_lambda(g: Graph, lam: DegreeBound) -> tuple[Graph, dict]:
    """Remove every vertex with bound zero together with its edges.

    BD(G, λ) is unchanged by this; one pass suffices since removal never
    alters the bound of a surviving vertex.
    """
    check_bound(g, lam)
    zero = [v for v in g.vertices if lam[v] == 0]
    h = g.remove_vertices(*zero)
    return h, restrict(lam, h)


def path_graph(n: int) -> Graph:
    """Path with ``n`` vertices labelled 1..n."""
    return Graph.from_edges([(i, i + 1) for i in range(1, n)], vertices=range(1, n + 1))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges([(i, i % n + 1) for i in range(1, n + 1)])


def star_graph(n: int) -> Graph:
    """K_{1,n} with centre 0 and leaves 1..n."""
    return Graph.from_edges([(0, i) for i in range(1, n + 1)], vertices=[0])
