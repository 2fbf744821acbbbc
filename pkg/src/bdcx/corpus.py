"""Instance generators for the cross-check harness.

Forests are enumerated up to isomorphism of the pair (G, λ): BD(G, λ) depends
on the labelling only through relabelling, so one representative per class
covers every labelled instance.  Classes are built from weighted trees
(canonical AHU codes at the tree centre) combined as multisets.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from typing import Iterator

import networkx as nx

from .graph import Graph

# raw λ assignments above this count are sampled instead of enumerated
EXHAUSTIVE_LAMBDA_CAP = 3**6


def _adjacency(g: Graph) -> dict:
    adj = {v: [] for v in g.vertices}
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _centres(adj: dict) -> list:
    remaining = set(adj)
    deg = {v: len(adj[v]) for v in adj}
    layer = [v for v in adj if deg[v] <= 1]
    while len(remaining) > 2:
        nxt = []
        for v in layer:
            remaining.discard(v)
            for u in adj[v]:
                if u in remaining:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return sorted(remaining, key=repr)


def tree_code(g: Graph, lam: dict) -> str:
    """Canonical string of a vertex-weighted tree (equal iff isomorphic)."""
    adj = _adjacency(g)

    def rooted(v, parent) -> str:
        kids = sorted(rooted(u, v) for u in adj[v] if u != parent)
        return f"({lam[v]}{''.join(kids)})"

    return min(rooted(c, None) for c in _centres(adj))


def forest_code(g: Graph, lam: dict) -> tuple:
    return tuple(sorted(tree_code(c, {v: lam[v] for v in c.vertices}) for c in g.components()))


def disjoint_union(parts: list[tuple[Graph, dict]]) -> tuple[Graph, dict]:
    """Relabel the parts consecutively from 0 and put them side by side."""
    edges, lam, offset = [], {}, 0
    for g, mu in parts:
        index = {v: offset + i for i, v in enumerate(g.vertices)}
        edges += [(index[u], index[v]) for u, v in g.edges]
        lam.update({index[v]: mu[v] for v in g.vertices})
        offset += len(g.vertices)
    return Graph.from_edges(edges, vertices=range(offset)), lam


@lru_cache(maxsize=None)
def tree_shapes(n_edges: int) -> tuple[Graph, ...]:
    """Unlabelled trees with ``n_edges`` edges on vertices 0..n_edges."""
    out = []
    for t in nx.nonisomorphic_trees(n_edges + 1):
        out.append(Graph.from_edges(sorted(tuple(sorted(e)) for e in t.edges()), vertices=range(n_edges + 1)))
    return tuple(out)


def forest_shapes(n_edges: int) -> list[Graph]:
    """Unlabelled forests without isolated vertices having exactly ``n_edges`` edges."""
    trees = [t for s in range(1, n_edges + 1) for t in tree_shapes(s)]
    out = []

    def rec(start: int, left: int, chosen: list) -> None:
        if left == 0:
            out.append(disjoint_union([(t, {v: 1 for v in t.vertices}) for t in chosen])[0])
            return
        for i in range(start, len(trees)):
            if len(trees[i].edges) <= left:
                rec(i, left - len(trees[i].edges), chosen + [trees[i]])

    rec(0, n_edges, [])
    return out


@lru_cache(maxsize=None)
def weighted_trees(n_edges: int, lambda_max: int) -> tuple[tuple[Graph, dict], ...]:
    """One representative per isomorphism class of trees weighted in 1..lambda_max."""
    out = []
    for t in tree_shapes(n_edges):
        seen = set()
        for values in product(range(1, lambda_max + 1), repeat=len(t.vertices)):
            lam = dict(zip(t.vertices, values))
            code = tree_code(t, lam)
            if code not in seen:
                seen.add(code)
                out.append((t, lam))
    return tuple(out)


def exhaustive_forests(max_edges: int, lambda_max: int, min_edges: int = 1) -> Iterator[tuple[Graph, dict]]:
    """Every weighted forest class with min_edges..max_edges edges and bounds in 1..lambda_max."""
    for m in range(min_edges, max_edges + 1):
        pieces = [wt for s in range(1, m + 1) for wt in weighted_trees(s, lambda_max)]

        def rec(start: int, left: int, chosen: list):
            if left == 0:
                yield disjoint_union(chosen)
                return
            for i in range(start, len(pieces)):
                size = len(pieces[i][0].edges)
                if size <= left:
                    yield from rec(i, left - size, chosen + [pieces[i]])

        yield from rec(0, m, [])


def labelled_forests(n_vertices: int, max_edges: int) -> Iterator[Graph]:
    """Forests on vertices 0..n-1 by filtering edge subsets of the complete graph."""
    all_edges = list(combinations(range(n_vertices), 2))
    for m in range(0, max_edges + 1):
        for es in combinations(all_edges, m):
            g = Graph.from_edges(es, vertices=range(n_vertices))
            if g.is_forest():
                yield g


def random_tree(rng: random.Random, n: int) -> list[tuple[int, int]]:
    """Uniform labelled tree on 0..n-1 via a random Prüfer sequence."""
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return edges


def random_forest(rng: random.Random, n_edges: int, lambda_max: int, max_components: int = 3) -> tuple[Graph, dict]:
    """Random forest with ``n_edges`` edges: a uniform tree with a few edges cut away."""
    c = rng.randint(1, max_components)
    edges = random_tree(rng, n_edges + c)
    for _ in range(c - 1):
        edges.pop(rng.randrange(len(edges)))
    used = sorted({x for e in edges for x in e})
    index = {v: i for i, v in enumerate(used)}
    g = Graph.from_edges(sorted((index[u], index[v]) for u, v in edges), vertices=range(len(used)))
    lam = {v: rng.randint(1, lambda_max) for v in g.vertices}
    return g, lam


def bound_assignments(g: Graph, lambda_max: int, rng: random.Random, cap: int = EXHAUSTIVE_LAMBDA_CAP) -> list[dict]:
    """All bounds in 1..lambda_max when there are at most ``cap``, else ``cap`` seeded samples."""
    n = len(g.vertices)
    if lambda_max**n <= cap:
        return [dict(zip(g.vertices, vals)) for vals in product(range(1, lambda_max + 1), repeat=n)]
    return [{v: rng.randint(1, lambda_max) for v in g.vertices} for _ in range(cap)]


def leafy_graphs(max_edges: int, max_vertices: int) -> list[Graph]:
    """Connected graphs (up to isomorphism) having a leaf whose neighbour has another edge."""
    out = []
    for a in nx.graph_atlas_g():
        n, m = a.number_of_nodes(), a.number_of_edges()
        if n < 3 or n > max_vertices or m > max_edges or not nx.is_connected(a):
            continue
        if any(a.degree(v) == 1 and a.degree(next(iter(a[v]))) >= 2 for v in a):
            out.append(Graph.from_edges(sorted(tuple(sorted(e)) for e in a.edges()), vertices=range(n)))
    return out

