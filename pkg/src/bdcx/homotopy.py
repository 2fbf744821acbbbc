"""Symbolic wedge-of-spheres homotopy types and the decompositions of BD(G, λ).

The wedge type of BD of a forest is computed by a recursion that only ever
peels a leaf: strip zero-bound vertices, split into components (join), detect
cones, and otherwise expand the star at the least leaf edge e = {v, w}:

    BD(G, λ) ≃ ⋁_{T ⊆ N(w) - v, |T| = λ(w)} Σ^{λ(w)} BD(G - v - w, λ_T)

where λ_T lowers λ by one on T.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Mapping, NamedTuple

from .errors import NotAForest, PreconditionError
from .graph import DegreeBound, Edge, Graph, check_bound, decrement, restrict, strip_zero_lambda


@dataclass(frozen=True)
class SphereWedge:
    """Contractible (empty ``spheres``) or a wedge of spheres as ``((dim, count), ...)``.

    ``S^{-1}`` is the empty complex; it can only appear alone and once.
    """

    spheres: tuple = ()

    def __post_init__(self):
        dims = [d for d, _ in self.spheres]
        if any(c <= 0 for _, c in self.spheres) or dims != sorted(set(dims)):
            raise ValueError(f"malformed sphere multiset {self.spheres!r}")
        if -1 in dims and self.spheres != ((-1, 1),):
            raise ValueError("S^-1 admits no nontrivial wedge")

    @classmethod
    def of(cls, counts: Mapping[int, int]) -> SphereWedge:
        return cls(tuple(sorted((d, c) for d, c in counts.items() if c)))

    @classmethod
    def point(cls) -> SphereWedge:
        return cls()

    @classmethod
    def empty_sphere(cls) -> SphereWedge:
        return cls(((-1, 1),))

    @property
    def is_contractible(self) -> bool:
        return not self.spheres

    def betti(self) -> dict[int, int]:
        """Reduced Betti numbers implied by this type."""
        return dict(self.spheres)

    def to_json(self):
        if self.is_contractible:
            return "contractible"
        return {str(d): c for d, c in self.spheres}

    def __str__(self) -> str:
        if self.is_contractible:
            return "contractible"
        return " v ".join(f"{c}*S^{d}" if c > 1 else f"S^{d}" for d, c in self.spheres)


CONTRACTIBLE = SphereWedge.point()
EMPTY_SPHERE = SphereWedge.empty_sphere()


def wedge_suspend(x: SphereWedge, t: int) -> SphereWedge:
    if t < 0:
        raise ValueError("suspension count must be non-negative")
    return SphereWedge(tuple((d + t, c) for d, c in x.spheres))


def wedge_join(x: SphereWedge, y: SphereWedge) -> SphereWedge:
    """Join: S^a * S^b = S^{a+b+1}; contractible absorbs, S^{-1} is the unit."""
    if x.is_contractible or y.is_contractible:
        return CONTRACTIBLE
    counts: dict[int, int] = {}
    for a, ca in x.spheres:
        for b, cb in y.spheres:
            counts[a + b + 1] = counts.get(a + b + 1, 0) + ca * cb
    return SphereWedge.of(counts)


def wedge_sum(parts: Iterable[SphereWedge]) -> SphereWedge:
    """Wedge sum; contractible summands vanish and an empty sum is a point."""
    counts: dict[int, int] = {}
    for p in parts:
        for d, c in p.spheres:
            if d == -1:
                raise PreconditionError("cannot wedge the empty sphere S^-1")
            counts[d] = counts.get(d, 0) + c
    return SphereWedge.of(counts)


def skeleton_type(n: int, k: int) -> SphereWedge:
    """BD(K_{1,n}) with centre bound k: the (k-1)-skeleton of an (n-1)-simplex."""
    if n < 1 or k < 1:
        raise PreconditionError("need n >= 1 and k >= 1")
    return SphereWedge.of({k - 1: comb(n - 1, k)})


class Instance(NamedTuple):
    graph: Graph
    bound: dict


# -- single-step decompositions ---------------------------------------------


def _leaf_ends(g: Graph, e: Edge, leaf=None) -> tuple:
    e = g.normalize(*e)
    if leaf is None:
        leaf = next((x for x in e if g.degree(x) == 1), None)
    if leaf not in e or g.degree(leaf) != 1:
        raise PreconditionError(f"{e!r} is not a leaf edge")
    w = e[1] if e[0] == leaf else e[0]
    return e, leaf, w


def leaf_split(g: Graph, lam: DegreeBound, e: Edge, f: Edge) -> tuple[Instance, Instance]:
    """Split at a leaf e = {v, w} and an edge f = {w, u}: BD(G) ≃ BD(G-f, λ) ∨ Σ BD(G-f, λ_f)."""
    check_bound(g, lam)
    f = g.normalize(*f)
    e = g.normalize(*e)
    if e == f:
        raise PreconditionError("e and f must be distinct")
    shared = set(e) & set(f)
    if len(shared) != 1:
        raise PreconditionError(f"{f!r} is not incident to {e!r}")
    (w,) = shared
    v = e[1] if e[0] == w else e[0]
    u = f[1] if f[0] == w else f[0]
    if g.degree(v) != 1:
        raise PreconditionError(f"{e!r} is not a leaf at {v!r}")
    if not (lam[u] and lam[v] and lam[w]):
        raise PreconditionError("bounds at u, v, w must be nonzero")
    h = g.remove_edges(f)
    return Instance(h, dict(lam)), Instance(h, decrement(lam, f))


def star_decompose(g: Graph, lam: DegreeBound, e: Edge, leaf=None) -> list[tuple[tuple, Instance]]:
    """Expand the star at leaf edge e = {v, w}: one summand Σ^{λ(w)} BD(G_e, λ_T) per T.

    An empty list means the complex is contractible.
    """
    check_bound(g, lam)
    e, v, w = _leaf_ends(g, e, leaf)
    others = [x for x in g.neighbors(w) if x != v]
    if any(lam[x] == 0 for x in [v, w, *others]):
        raise PreconditionError("bound must be nonzero on the closed neighbourhood of w")
    ge = g.remove_vertices(v, w)
    base = restrict(lam, ge)
    return [(t, Instance(ge, decrement(base, t))) for t in combinations(others, lam[w])]


@dataclass(frozen=True)
class CornerTerm:
    multiplicity: int
    suspension: int
    instance: Instance


def corner_decompose(g: Graph, lam: DegreeBound, v) -> list[CornerTerm]:
    """Decompose at a corner point v (interior, exactly one interior neighbour w).

    With deg(v) = n + 1 and G' = G minus v and its leaves:
    BD(G) ≃ C(n-1, λ(v)) Σ^{λ(v)} BD(G', λ) ∨ C(n-1, λ(v)-1) Σ^{λ(v)} BD(G', λ̂),
    λ̂ lowering λ at w.  Zero-multiplicity terms are omitted.
    """
    check_bound(g, lam)
    if any(k == 0 for k in lam.values()):
        raise PreconditionError("corner decomposition needs a nowhere-zero bound")
    n = g.degree(v) - 1
    if n < 1:
        raise PreconditionError(f"{v!r} is not an interior vertex")
    nbrs = g.neighbors(v)
    interior = [x for x in nbrs if g.degree(x) > 1]
    if len(interior) != 1:
        raise PreconditionError(f"{v!r} is not adjacent to exactly one interior vertex")
    (w,) = interior
    gp = g.remove_vertices(v, *(x for x in nbrs if x != w))
    plain = restrict(lam, gp)
    hat = decrement(plain, [w])
    k = lam[v]
    terms = [
        CornerTerm(comb(n - 1, k), k, Instance(gp, plain)),
        CornerTerm(comb(n - 1, k - 1), k, Instance(gp, hat)),
    ]
    return [t for t in terms if t.multiplicity]


def corner_points(g: Graph) -> list:
    """Interior vertices adjacent to exactly one interior vertex."""
    deg = {v: g.degree(v) for v in g.vertices}
    return [
        v
        for v in g.vertices
        if deg[v] > 1 and sum(deg[x] > 1 for x in g.neighbors(v)) == 1
    ]


def combine_terms(terms: Iterable[CornerTerm], evaluate: Callable[[Instance], SphereWedge]) -> SphereWedge:
    return wedge_sum(
        wedge_suspend(evaluate(t.instance), t.suspension)
        for t in terms
        for _ in range(t.multiplicity)
    )


# -- forest recursion ---------------------------------------------------------


@dataclass
class DecompositionTrace:
    rule: str  # strip | base-case | component-join | star
    graph: Graph
    bound: dict
    result: SphereWedge = CONTRACTIBLE
    edge: Edge | None = None
    subset: tuple | None = None
    note: str = ""
    children: list = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "rule": self.rule,
            "edges": [list(e) for e in self.graph.edges],
            "lambda": {str(v): self.bound[v] for v in self.graph.vertices},
            "result": self.result.to_json(),
        }
        if self.note:
            out["note"] = self.note
        if self.edge is not None:
            out["edge"] = list(self.edge)
        if self.subset is not None:
            out["subset"] = list(self.subset)
        if self.children:
            out["children"] = [c.to_json() for c in self.children]
        return out

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()


LeafChooser = Callable[[list], tuple]


def forest_type(g: Graph, lam: DegreeBound, choose: LeafChooser | None = None) -> tuple[SphereWedge, DecompositionTrace]:
    """Exact homotopy type of BD(G, λ) for a forest G, with the decomposition trace.

    ``choose`` picks a (leaf edge, leaf vertex) pair from the candidates; by
    default the least leaf edge is taken.
    """
    check_bound(g, lam)
    if not g.is_forest():
        raise NotAForest("graph contains a cycle")
    return _forest(g, dict(lam), choose)


def _forest(g: Graph, lam: dict, choose: LeafChooser | None) -> tuple[SphereWedge, DecompositionTrace]:
    h, mu = strip_zero_lambda(g, lam)
    if len(h.edges) < len(g.edges):
        x, sub = _forest(h, mu, choose)
        return x, DecompositionTrace("strip", g, lam, x, children=[sub])

    if not h.edges:
        return EMPTY_SPHERE, DecompositionTrace("base-case", h, mu, EMPTY_SPHERE, note="no edges")

    comps = h.components()
    if len(comps) > 1:
        x = EMPTY_SPHERE
        kids = []
        for c in comps:
            y, t = _forest(c, restrict(mu, c), choose)
            x = wedge_join(x, y)
            kids.append(t)
        return x, DecompositionTrace("component-join", h, mu, x, children=kids)

    if len(h.edges) == 1:
        return CONTRACTIBLE, DecompositionTrace("base-case", h, mu, CONTRACTIBLE, h.edges[0], note="single edge")

    deg = {v: h.degree(v) for v in h.vertices}
    for e in h.edges:
        if all(mu[x] >= deg[x] for x in e):
            return CONTRACTIBLE, DecompositionTrace("base-case", h, mu, CONTRACTIBLE, e, note="cone")

    leaves = h.leaf_edges()
    e, v = choose(leaves) if choose else leaves[0]
    w = e[1] if e[0] == v else e[0]
    kids = []
    parts = []
    for t, inst in star_decompose(h, mu, e, leaf=v):
        y, sub = _forest(inst.graph, inst.bound, choose)
        sub.subset = t
        kids.append(sub)
        parts.append(wedge_suspend(y, mu[w]))
    x = wedge_sum(parts)
    return x, DecompositionTrace("star", h, mu, x, e, children=kids)
