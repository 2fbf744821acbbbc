"""Cross-checks of the symbolic machinery against the homology oracle.

Every check returns a ``{name: bool}`` mapping so that results from many
instances can be tallied uniformly.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from . import corpus
from .chordality import is_chordal, is_simplicial_vertex
from .complex import join
from .graph import Graph, decrement
from .homology import reduced_homology
from .homotopy import combine_terms, corner_decompose, corner_points, forest_type
from .hypergraph import (
    bd_complex,
    contract_vertex,
    delete_vertex,
    edge_witnesses,
    independence_complex,
    lambda_hypergraph,
    minimal_reduction,
)
from .instance_io import format_instance
from .shelling import find_shelling, spanning_facets, verify_shelling


def oracle_betti(g: Graph, lam: dict) -> dict[int, int]:
    return reduced_homology(bd_complex(g, lam)).betti()


def add_betti(*parts: dict[int, int], shift: int = 0) -> dict[int, int]:
    out: Counter = Counter()
    for p in parts:
        for d, b in p.items():
            out[d + shift] += b
    return {d: b for d, b in sorted(out.items()) if b}


def _kw(budget):
    return {} if budget is None else {"budget": budget}


# -- single-instance checks -------------------------------------------------


def leaf_split_pairs(g: Graph, lam: dict) -> list[tuple[tuple, tuple]]:
    """All (e, f): e a leaf at v, f = {w, u} another edge at w, bounds at u, v, w nonzero."""
    pairs = []
    for e, v in g.leaf_edges():
        w = e[1] if e[0] == v else e[0]
        for f in g.incident(w):
            if f == e:
                continue
            u = f[1] if f[0] == w else f[0]
            if lam[u] and lam[v] and lam[w]:
                pairs.append((e, f))
    return pairs


def leaf_split_checks(g: Graph, lam: dict) -> dict[str, bool]:
    """Homology additivity BD(G) = BD(G-f) ∨ Σ BD(G-f, λ_f) and the star inclusion, per (e, f)."""
    pairs = leaf_split_pairs(g, lam)
    if not pairs:
        return {}
    whole = oracle_betti(g, lam)
    additive = star = True
    for e, f in pairs:
        h = g.remove_edges(f)
        plain = bd_complex(h, lam)
        lowered = bd_complex(h, decrement(lam, f))
        rhs = add_betti(reduced_homology(plain).betti(), add_betti(reduced_homology(lowered).betti(), shift=1))
        additive &= whole == rhs
        star &= all(sigma | {e} in plain for sigma in lowered.faces())
    return {"leaf_split_additivity": additive, "star_inclusion": star}


def corner_checks(g: Graph, lam: dict, symbolic: bool = False) -> dict[str, bool]:
    """Binomial corner decomposition against the oracle (and the forest recursion if ``symbolic``)."""
    if any(k == 0 for k in lam.values()):
        return {}
    corners = corner_points(g)
    if not corners:
        return {}
    whole = oracle_betti(g, lam)
    ok = sym_ok = True
    for v in corners:
        terms = corner_decompose(g, lam, v)
        combined = add_betti(*(
            add_betti(oracle_betti(*t.instance), shift=t.suspension)
            for t in terms
            for _ in range(t.multiplicity)
        ))
        ok &= combined == whole
        if symbolic:
            wedge = combine_terms(terms, lambda inst: forest_type(*inst)[0])
            sym_ok &= wedge == forest_type(g, lam)[0]
    out = {"corner_decomposition": ok}
    if symbolic:
        out["corner_vs_star"] = sym_ok
    return out


def structural_checks(g: Graph, lam: dict) -> dict[str, bool]:
    """Identities relating BD(G, λ), L(G, λ), its minors and independence complexes."""
    hyper = lambda_hypergraph(g, lam)
    k = bd_complex(g, lam)
    out = {
        "I_of_L_equals_BD": independence_complex(hyper) == k,
        "minimal_reduction_same_complex": independence_complex(minimal_reduction(hyper)) == k,
    }
    if all(lam.values()):
        out["unique_witness"] = all(len(ws) == 1 for ws in edge_witnesses(g, lam).values())

    comps = g.components()
    if len(comps) > 1:
        joined = independence_complex(lambda_hypergraph(comps[0], {v: lam[v] for v in comps[0].vertices}))
        for c in comps[1:]:
            joined = join(joined, independence_complex(lambda_hypergraph(c, {v: lam[v] for v in c.vertices})))
        out["disjoint_union_is_join"] = joined == k

    deletion = link = True
    for x in hyper.vertices:
        if x in hyper.looped:
            continue
        deletion &= k.deletion(x) == independence_complex(delete_vertex(hyper, x))
        link &= k.link(x) == independence_complex(contract_vertex(hyper, x))
    out["deletion_commutes"] = deletion
    out["link_is_contraction"] = link

    simplicial = True
    for e, _v in g.leaf_edges():
        if lam[e[0]] and lam[e[1]]:
            simplicial &= is_simplicial_vertex(hyper, e)
    out["leaf_edge_simplicial"] = simplicial

    del_ok = con_ok = True
    for e in g.edges:
        if not (lam[e[0]] and lam[e[1]]):
            continue
        h = g.remove_edges(e)
        del_ok &= delete_vertex(hyper, e) == lambda_hypergraph(h, lam)
        con_ok &= minimal_reduction(contract_vertex(hyper, e)) == minimal_reduction(
            lambda_hypergraph(h, decrement(lam, e))
        )
    out["deletion_matches_edge_removal"] = del_ok
    out["contraction_matches_lowered_bound"] = con_ok
    return out


def forest_checks(
    g: Graph,
    lam: dict,
    *,
    shell: bool = True,
    chordal: bool = True,
    structural: bool = True,
    corner: bool = True,
    budget: int | None = None,
) -> dict[str, bool]:
    profile = reduced_homology(bd_complex(g, lam))
    wedge, _ = forest_type(g, lam)
    out = {
        "symbolic_betti_matches_oracle": wedge.betti() == profile.betti(),
        "torsion_free": profile.is_torsion_free,
    }
    if chordal:
        out["L_is_chordal"] = is_chordal(lambda_hypergraph(g, lam), **_kw(budget)).chordal
    if shell:
        k = bd_complex(g, lam)
        order = find_shelling(k, **_kw(budget))
        out["shellable"] = order is not None and verify_shelling(k, order)
        if order is not None:
            counts = Counter(len(f) - 1 for f in spanning_facets(k, order))
            if k.facet_masks == frozenset({0}):
                counts = Counter({-1: 1})
            out["spanning_facets_match_oracle"] = dict(counts) == profile.betti()
    if structural:
        out.update(structural_checks(g, lam))
    if corner:
        out.update(corner_checks(g, lam, symbolic=True))
    return out


# -- corpus sweep -----------------------------------------------------------


@dataclass
class Sweep:
    mode: str
    instances: int = 0
    passed: Counter = field(default_factory=Counter)
    failed: Counter = field(default_factory=Counter)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, key: str, g: Graph, lam: dict, checks: dict[str, bool]) -> None:
        self.instances += 1
        bad = sorted(name for name, good in checks.items() if not good)
        for name, good in checks.items():
            (self.passed if good else self.failed)[name] += 1
        if bad:
            self.failures.append({"key": key, "failed": bad, "instance": format_instance(g, lam, key)})

    def summary(self) -> dict:
        names = sorted(set(self.passed) | set(self.failed))
        return {n: {"passed": self.passed[n], "failed": self.failed[n]} for n in names}

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "instances": self.instances,
            "summary": self.summary(),
            "failures": sorted(self.failures, key=lambda f: f["key"]),
        }


def instance_key(g: Graph, lam: dict) -> str:
    es = " ".join(f"{u}-{v}" for u, v in g.edges)
    ls = ",".join(str(lam[v]) for v in g.vertices)
    return f"m{len(g.edges)} [{es}] lambda=[{ls}]"


def forest_corpus(max_edges: int, lambda_max: int, seed: int, samples: int, exhaustive_max: int = 5):
    """Exhaustive weighted forest classes up to ``exhaustive_max`` edges, then seeded samples."""
    yield from corpus.exhaustive_forests(min(max_edges, exhaustive_max), lambda_max)
    if max_edges > exhaustive_max:
        rng = random.Random(seed)
        for _ in range(samples):
            m = rng.randint(exhaustive_max + 1, max_edges)
            yield corpus.random_forest(rng, m, lambda_max)


def leafy_corpus(max_edges: int, lambda_max: int, seed: int, max_vertices: int = 6):
    rng = random.Random(seed)
    for g in corpus.leafy_graphs(max_edges, max_vertices):
        for lam in corpus.bound_assignments(g, lambda_max, rng):
            yield g, lam


def crosscheck_enumerate(
    max_edges: int,
    lambda_max: int,
    mode: str = "forests",
    seed: int = 0,
    *,
    samples: int = 100,
    max_vertices: int = 6,
    shell_max_edges: int = 6,
    budget: int | None = None,
) -> Sweep:
    if max_edges < 1:
        raise ValueError("max_edges must be at least 1")
    sweep = Sweep(mode)
    if mode == "forests":
        for g, lam in forest_corpus(max_edges, lambda_max, seed, samples):
            checks = forest_checks(g, lam, shell=len(g.edges) <= shell_max_edges, budget=budget)
            sweep.record(instance_key(g, lam), g, lam, checks)
    elif mode == "leafy-graphs":
        for g, lam in leafy_corpus(max_edges, lambda_max, seed, max_vertices):
            checks = leaf_split_checks(g, lam)
            checks.update(corner_checks(g, lam))
            sweep.record(instance_key(g, lam), g, lam, checks)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return sweep
