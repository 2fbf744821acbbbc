from collections import Counter
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bdcx.complex import from_faces
from bdcx.errors import BudgetExceeded, InvalidShelling, PreconditionError
from bdcx.graph import constant_bound, path_graph, star_graph
from bdcx.homology import reduced_homology
from bdcx.homotopy import SphereWedge
from bdcx.hypergraph import bd_complex
from bdcx.shelling import (
    find_shelling,
    is_vertex_decomposable,
    spanning_facets,
    verify_shelling,
    wedge_from_shelling,
)
from bdcx.complex import SimplicialComplex


def is_shelling_by_definition(order):
    """Each facet meets the earlier ones in a pure complex of codimension one."""
    for j in range(1, len(order)):
        f = frozenset(order[j])
        meets = {f & frozenset(g) for g in order[:j]}
        maximal = [m for m in meets if not any(m < o for o in meets)]
        if any(len(m) != len(f) - 1 for m in maximal):
            return False
    return True


def brute_shellable(k):
    return any(is_shelling_by_definition(p) for p in permutations(k.facet_list()))


def hollow_simplex(vs):
    return [set(c) for c in combinations(vs, len(vs) - 1)]


small_complexes = st.lists(
    st.frozensets(st.integers(0, 5), min_size=1, max_size=4), min_size=1, max_size=6
).map(from_faces)


def test_path_orders():
    g = path_graph(4)
    k = bd_complex(g, constant_bound(g))
    e1, e2, e3 = g.edges
    assert k.facets == {frozenset([e1, e3]), frozenset([e2])}
    assert verify_shelling(k, [{e1, e3}, {e2}])
    # a nonpure order must not put the smaller facet first
    assert not verify_shelling(k, [{e2}, {e1, e3}])


def test_two_points():
    k = from_faces([{"a"}, {"b"}])
    assert verify_shelling(k, [{"a"}, {"b"}])
    order = find_shelling(k)
    assert order is not None and len(order) == 2
    assert wedge_from_shelling(k, order) == SphereWedge.of({0: 1})


def test_two_disjoint_hollow_triangles_are_not_shellable():
    k = from_faces(hollow_simplex("abc") + hollow_simplex("xyz"))
    assert find_shelling(k) is None
    assert not brute_shellable(k)


def test_full_simplex():
    k = from_faces([{1, 2, 3}])
    order = find_shelling(k)
    assert list(order) == [frozenset({1, 2, 3})]
    assert wedge_from_shelling(k, order).is_contractible
    assert is_vertex_decomposable(k)


def test_hollow_tetrahedron_is_one_sphere():
    k = from_faces(hollow_simplex("abcd"))
    order = find_shelling(k)
    assert wedge_from_shelling(k, order) == SphereWedge.of({2: 1})


def test_minus_one_sphere():
    k = from_faces([])
    order = find_shelling(k)
    assert wedge_from_shelling(k, order) == SphereWedge.empty_sphere()


def test_star_with_centre_two_wedge():
    g = star_graph(4)
    lam = constant_bound(g)
    lam[0] = 2
    k = bd_complex(g, lam)
    order = find_shelling(k)
    assert verify_shelling(k, order)
    assert wedge_from_shelling(k, order) == SphereWedge.of({1: 3})
    assert len(spanning_facets(k, order)) == 3


def test_invalid_orders_raise():
    k = from_faces([{"a"}, {"b"}])
    with pytest.raises(InvalidShelling):
        verify_shelling(k, [{"a"}])
    with pytest.raises(InvalidShelling):
        verify_shelling(k, [{"a"}, {"a"}])
    k2 = from_faces(hollow_simplex("abc") + hollow_simplex("xyz"))
    with pytest.raises(InvalidShelling):
        wedge_from_shelling(k2, k2.facet_list())


def test_void_rejected():
    with pytest.raises(PreconditionError):
        find_shelling(SimplicialComplex.void())
    with pytest.raises(PreconditionError):
        is_vertex_decomposable(SimplicialComplex.void())


def test_budget():
    k = from_faces(hollow_simplex("abc") + hollow_simplex("xyz"))
    with pytest.raises(BudgetExceeded):
        find_shelling(k, budget=1)


def test_vertex_decomposable_examples():
    assert is_vertex_decomposable(from_faces([{"a"}, {"b"}]))
    assert is_vertex_decomposable(from_faces([{1, 2}, {2, 3}, {3, 4}]))
    assert is_vertex_decomposable(from_faces(hollow_simplex("abcd")))
    assert not is_vertex_decomposable(from_faces(hollow_simplex("abc") + hollow_simplex("xyz")))
    # two triangles meeting in a vertex: the intersection is not of codimension one
    bowtie = from_faces([{1, 2, 3}, {3, 4, 5}])
    assert find_shelling(bowtie) is None
    assert not is_vertex_decomposable(bowtie)


@settings(max_examples=150, deadline=None)
@given(small_complexes)
def test_search_agrees_with_permutation_oracle(k):
    if len(k.facet_masks) > 6:
        return
    order = find_shelling(k)
    assert (order is not None) == brute_shellable(k)
    if order is not None:
        assert verify_shelling(k, order)
        assert is_shelling_by_definition([set(f) for f in order])


@settings(max_examples=150, deadline=None)
@given(small_complexes, st.randoms(use_true_random=False))
def test_verify_agrees_with_definition(k, rnd):
    order = k.facet_list()
    rnd.shuffle(order)
    assert verify_shelling(k, order) == is_shelling_by_definition(order)


@settings(max_examples=150, deadline=None)
@given(small_complexes)
def test_spanning_facets_give_homology(k):
    order = find_shelling(k)
    if order is None:
        return
    counts = Counter(len(f) - 1 for f in spanning_facets(k, order))
    assert dict(counts) == reduced_homology(k).betti()
    assert wedge_from_shelling(k, order).betti() == reduced_homology(k).betti()


@settings(max_examples=150, deadline=None)
@given(small_complexes)
def test_vertex_decomposable_implies_shellable(k):
    if is_vertex_decomposable(k):
        assert find_shelling(k) is not None
