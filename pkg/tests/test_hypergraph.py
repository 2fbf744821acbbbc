from itertools import chain, combinations, product

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bdcx.complex import from_faces, join
from bdcx.errors import PreconditionError, UnknownVertex
from bdcx.graph import Graph, constant_bound, decrement, path_graph, star_graph, strip_zero_lambda
from bdcx.homology import reduced_homology
from bdcx.hypergraph import (
    Hypergraph,
    bd_complex,
    contract_vertex,
    delete_vertex,
    disjoint_union,
    edge_witnesses,
    independence_complex,
    is_bd_face,
    lambda_hypergraph,
    minimal_reduction,
)


def brute_bd(g, lam):
    """BD(G, λ) by filtering every subset of the edges."""
    subsets = chain.from_iterable(combinations(g.edges, r) for r in range(len(g.edges) + 1))
    return from_faces([s for s in subsets if is_bd_face(g, lam, s)])


def small_graphs(max_nodes=4):
    for a in nx.graph_atlas_g()[1:]:
        if a.number_of_nodes() <= max_nodes and a.number_of_edges():
            yield Graph.from_edges(sorted(a.edges()), vertices=range(a.number_of_nodes()))


@st.composite
def graphs_with_bounds(draw, max_nodes=6, max_bound=3, min_bound=0):
    n = draw(st.integers(2, max_nodes))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1, max_size=8))
    g = Graph.from_edges(edges, vertices=range(n))
    lam = {v: draw(st.integers(min_bound, max_bound)) for v in g.vertices}
    return g, lam


# -- bd_complex ---------------------------------------------------------------


def test_matching_complex_of_claw_is_three_points():
    g = star_graph(3)
    k = bd_complex(g, constant_bound(g))
    assert k.facets == {frozenset([e]) for e in g.edges}
    assert reduced_homology(k).betti() == {0: 2}


def test_single_edge_is_a_point():
    g = Graph.from_edges([("a", "b")])
    k = bd_complex(g, constant_bound(g))
    assert k.facets == {frozenset([("a", "b")])}
    assert reduced_homology(k).is_trivial


def test_slack_middle_vertex_gives_full_simplex():
    g = Graph.from_edges([("a", "b"), ("b", "c")])
    k = bd_complex(g, {"a": 1, "b": 2, "c": 1})
    assert k.facets == {frozenset(g.edges)}


def test_zero_bound_edges_leave_the_ground_set():
    g = path_graph(3)
    k = bd_complex(g, {1: 0, 2: 1, 3: 1})
    assert k.vertices == ((2, 3),)


@pytest.mark.parametrize("g", list(small_graphs(4)), ids=str)
def test_bd_matches_subset_filtering(g):
    for values in product(range(4), repeat=len(g.vertices)):
        lam = dict(zip(g.vertices, values))
        assert bd_complex(g, lam) == brute_bd(g, lam)


# -- L(G, λ) ------------------------------------------------------------------


def test_lambda_hypergraph_of_path_is_line_graph():
    g = Graph.from_edges([("a", "b"), ("b", "c")])
    h = lambda_hypergraph(g, constant_bound(g))
    assert h.edges == (frozenset(g.edges),)


def test_claw_with_centre_bound_two_has_one_hyperedge():
    g = star_graph(3)
    lam = constant_bound(g)
    lam[0] = 2
    assert lambda_hypergraph(g, lam).edges == (frozenset(g.edges),)


def test_zero_bound_gives_loops():
    g = star_graph(2)
    lam = {0: 0, 1: 1, 2: 1}
    h = lambda_hypergraph(g, lam)
    assert set(h.edges) == {frozenset([(0, 1)]), frozenset([(0, 2)])}
    assert h.looped == {(0, 1), (0, 2)}


@settings(max_examples=200, deadline=None)
@given(graphs_with_bounds())
def test_independence_complex_of_L_is_BD(inst):
    g, lam = inst
    assert independence_complex(lambda_hypergraph(g, lam)) == bd_complex(g, lam)


@settings(max_examples=100, deadline=None)
@given(graphs_with_bounds(min_bound=1))
def test_positive_bounds_give_unique_witnesses(inst):
    g, lam = inst
    assert all(len(ws) == 1 for ws in edge_witnesses(g, lam).values())


# -- independence complexes ----------------------------------------------------


def test_independence_of_single_edge_is_two_points():
    h = Hypergraph("xy", [{"x", "y"}])
    assert independence_complex(h) == from_faces([{"x"}, {"y"}])


def test_loop_and_exposed_vertex():
    h = Hypergraph("xy", [{"x"}])
    k = independence_complex(h)
    assert k == from_faces([{"y"}])
    assert k.is_cone_with_apex("y")


def test_edgeless_hypergraph_gives_simplex():
    assert independence_complex(Hypergraph("xy", [])) == from_faces([{"x", "y"}])


def test_degenerate_hypergraph_has_void_complex():
    h = contract_vertex(Hypergraph("ab", [{"a"}, {"a", "b"}]), "a")
    assert h.degenerate
    assert independence_complex(h).is_void


def test_empty_edge_is_rejected():
    with pytest.raises(PreconditionError):
        Hypergraph("a", [set()])


# -- minors -------------------------------------------------------------------


def test_minimal_reduction_examples():
    assert minimal_reduction(Hypergraph("ab", [{"a"}, {"a", "b"}])).edges == (frozenset("a"),)
    h = Hypergraph("abc", [{"a", "b"}, {"b", "c"}])
    assert minimal_reduction(h) == h


def test_deletion_examples():
    h = Hypergraph("abc", [{"a", "b"}, {"b", "c"}])
    d = delete_vertex(h, "b")
    assert set(d.vertices) == {"a", "c"} and d.edges == ()
    h2 = Hypergraph("abcd", [{"a", "b"}, {"c", "d"}])
    assert delete_vertex(h2, "a").edges == (frozenset("cd"),)


def test_contraction_examples():
    h = Hypergraph("abc", [{"a", "b"}, {"b", "c"}])
    assert set(contract_vertex(h, "b").edges) == {frozenset("a"), frozenset("c")}
    assert contract_vertex(Hypergraph("abc", [{"a", "b", "c"}]), "a").edges == (frozenset("bc"),)
    assert set(contract_vertex(Hypergraph("abc", [{"a", "b"}, {"c"}]), "a").edges) == {frozenset("b"), frozenset("c")}


def test_unknown_vertex():
    h = Hypergraph("ab", [{"a", "b"}])
    with pytest.raises(UnknownVertex):
        delete_vertex(h, "z")
    with pytest.raises(UnknownVertex):
        contract_vertex(h, "z")


def test_leaf_edge_minors_on_a_path():
    g = path_graph(4)
    lam = constant_bound(g)
    e = (1, 2)
    h = lambda_hypergraph(g, lam)
    rest = g.remove_edges(e)
    assert delete_vertex(h, e) == lambda_hypergraph(rest, lam)
    assert minimal_reduction(contract_vertex(h, e)) == minimal_reduction(lambda_hypergraph(rest, decrement(lam, e)))


@settings(max_examples=150, deadline=None)
@given(graphs_with_bounds(min_bound=1))
def test_edge_deletion_and_contraction_in_L(inst):
    g, lam = inst
    h = lambda_hypergraph(g, lam)
    for e in g.edges:
        rest = g.remove_edges(e)
        assert delete_vertex(h, e) == lambda_hypergraph(rest, lam)
        assert minimal_reduction(contract_vertex(h, e)) == minimal_reduction(
            lambda_hypergraph(rest, decrement(lam, e))
        )


hypergraphs = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.frozensets(st.integers(0, n - 1), min_size=1, max_size=3), max_size=7).map(
        lambda es: Hypergraph(range(n), es)
    )
)


@settings(max_examples=200, deadline=None)
@given(hypergraphs)
def test_deletion_and_link_of_independence_complex(h):
    k = independence_complex(h)
    for v in h.vertices:
        if v in h.looped:
            continue
        assert k.deletion(v) == independence_complex(delete_vertex(h, v))
        assert k.link(v) == independence_complex(contract_vertex(h, v))


@settings(max_examples=200, deadline=None)
@given(hypergraphs)
def test_minimal_reduction_keeps_independence_complex(h):
    assert independence_complex(minimal_reduction(h)) == independence_complex(h)


@settings(max_examples=100, deadline=None)
@given(hypergraphs, hypergraphs)
def test_disjoint_union_gives_join(h1, h2):
    shifted = Hypergraph([v + 10 for v in h2.vertices], [{v + 10 for v in e} for e in h2.edges])
    assert independence_complex(disjoint_union(h1, shifted)) == join(
        independence_complex(h1), independence_complex(shifted)
    )


@settings(max_examples=200, deadline=None)
@given(hypergraphs)
def test_homology_splits_when_link_is_coned_off(h):
    # If I(H/v) sits inside the star of some w in I(H\v), then
    # I(H) ≃ I(H\v) ∨ Σ I(H/v) and reduced Betti numbers add with a shift.
    k = independence_complex(h)
    for v in h.vertices:
        if v in h.looped:
            continue
        dele = independence_complex(delete_vertex(h, v))
        link = independence_complex(contract_vertex(h, v))
        apex = [w for w in dele.vertices if all(f | {w} in dele for f in link.facets)]
        if not apex:
            continue
        expected = dict(reduced_homology(dele).betti())
        for d, b in reduced_homology(link).betti().items():
            expected[d + 1] = expected.get(d + 1, 0) + b
        assert reduced_homology(k).betti() == expected


# -- strip ----------------------------------------------------------------------


def test_strip_removes_zero_vertex():
    g = Graph.from_edges([("a", "b"), ("b", "c")])
    h, mu = strip_zero_lambda(g, {"a": 0, "b": 1, "c": 1})
    assert h.edges == (("b", "c"),)
    assert mu == {"b": 1, "c": 1}
    assert bd_complex(h, mu) == bd_complex(g, {"a": 0, "b": 1, "c": 1})


def test_strip_is_identity_for_positive_bounds():
    g = path_graph(4)
    assert strip_zero_lambda(g, constant_bound(g)) == (g, constant_bound(g))


def test_all_zero_bound_gives_minus_one_sphere():
    g = path_graph(4)
    h, mu = strip_zero_lambda(g, constant_bound(g, 0))
    assert h.edges == ()
    assert bd_complex(h, mu).facets == {frozenset()}
    assert bd_complex(g, constant_bound(g, 0)).facets == {frozenset()}


@settings(max_examples=100, deadline=None)
@given(graphs_with_bounds())
def test_strip_preserves_bd(inst):
    g, lam = inst
    assert bd_complex(*strip_zero_lambda(g, lam)) == bd_complex(g, lam)


def test_graph_validation():
    with pytest.raises(PreconditionError):
        Graph.from_edges([("a", "a")])
    with pytest.raises(PreconditionError):
        Graph.from_edges([("a", "b"), ("b", "a")])
    with pytest.raises(PreconditionError):
        bd_complex(path_graph(2), {1: 1})
