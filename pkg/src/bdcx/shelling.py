"""Nonpure shellings, spanning facets, and vertex decomposability.

A facet order F_1, ..., F_t is a shelling when each F_j (j > 1) meets the union
of its predecessors in a nonempty union of codimension-one faces of F_j.  Any
shelling can be rearranged so that facet dimensions never increase (keeping the
relative order inside each dimension), so the search only builds orders of
that form; an exhausted search therefore proves non-shellability.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .complex import SimplicialComplex, bits, popcount
from .errors import BudgetExceeded, InvalidShelling, PreconditionError
from .homotopy import SphereWedge

DEFAULT_NODE_BUDGET = 10_000_000


@dataclass(frozen=True)
class ShellingOrder:
    facets: tuple

    def __iter__(self):
        return iter(self.facets)

    def __len__(self) -> int:
        return len(self.facets)


def _attaching_set(face: int, earlier: Iterable[int]) -> int:
    """Vertices x of ``face`` whose opposite facet face-{x} lies in an earlier facet."""
    earlier = list(earlier)
    out = 0
    for i in bits(face):
        ridge = face & ~(1 << i)
        if any(ridge & ~g == 0 for g in earlier):
            out |= 1 << i
    return out


def _attaches(face: int, earlier: list[int]) -> bool:
    x = _attaching_set(face, earlier)
    # every earlier facet must miss some attaching vertex of ``face``
    return all(face & ~g & x for g in earlier)


def _order_masks(k: SimplicialComplex, order: Iterable) -> list[int]:
    masks = [k.mask_of(f) for f in order]
    if len(masks) != len(k.facet_masks) or set(masks) != k.facet_masks:
        raise InvalidShelling("order is not a permutation of the facets")
    return masks


def verify_shelling(k: SimplicialComplex, order: Iterable) -> bool:
    masks = _order_masks(k, order)
    return all(_attaches(masks[j], masks[:j]) for j in range(1, len(masks)))


def find_shelling(k: SimplicialComplex, budget: int = DEFAULT_NODE_BUDGET) -> ShellingOrder | None:
    """Backtracking search for a shelling.

    Returns ``None`` when the search space is exhausted without success and
    raises :class:`BudgetExceeded` when it runs out of nodes first.
    """
    if k.is_void:
        raise PreconditionError("the void complex has no facets to shell")
    facets = sorted(k.facet_masks, key=lambda m: (-popcount(m), list(bits(m))))
    n = len(facets)
    sizes = [popcount(m) for m in facets]
    dead: set[int] = set()
    nodes = 0
    placed: list[int] = []

    def rec(used: int) -> bool:
        nonlocal nodes
        if len(placed) == n:
            return True
        if used in dead:
            return False
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("shelling search", budget)
        # next facet must have the largest remaining size
        top = max(sizes[i] for i in range(n) if not used >> i & 1)
        earlier = [facets[i] for i in placed]
        for i in range(n):
            if used >> i & 1 or sizes[i] != top:
                continue
            if placed and not _attaches(facets[i], earlier):
                continue
            placed.append(i)
            if rec(used | 1 << i):
                return True
            placed.pop()
        dead.add(used)
        return False

    if not rec(0):
        return None
    return ShellingOrder(tuple(k.face_of(facets[i]) for i in placed))


def spanning_facets(k: SimplicialComplex, order: Iterable) -> list[frozenset]:
    """Facets whose whole boundary lies in the union of the earlier facets."""
    masks = _order_masks(k, order)
    return [k.face_of(m) for j, m in enumerate(masks) if j and _attaching_set(m, masks[:j]) == m]


def wedge_from_shelling(k: SimplicialComplex, order: Iterable) -> SphereWedge:
    """Homotopy type read off a shelling: one sphere per spanning facet."""
    order = list(order)
    if not verify_shelling(k, order):
        raise InvalidShelling("not a shelling order")
    if k.facet_masks == frozenset({0}):
        return SphereWedge.empty_sphere()
    counts: dict[int, int] = {}
    for f in spanning_facets(k, order):
        counts[len(f) - 1] = counts.get(len(f) - 1, 0) + 1
    return SphereWedge.of(counts)


def is_vertex_decomposable(k: SimplicialComplex, budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """Nonpure vertex decomposability.

    A shedding vertex v is one for which every facet of the deletion of v is
    already a facet of ``k``; equivalently, no face of the link is a facet of
    the deletion.
    """
    if k.is_void:
        raise PreconditionError("the void complex is not vertex decomposable")
    memo: dict[frozenset, bool] = {}
    calls = 0

    def vd(c: SimplicialComplex) -> bool:
        nonlocal calls
        key = c.facets
        if key in memo:
            return memo[key]
        calls += 1
        if calls > budget:
            raise BudgetExceeded("vertex decomposability", budget)
        result = len(key) == 1
        if not result:
            for v in c.vertices:
                d = c.deletion(v)
                if not d.facets <= key:
                    continue
                if vd(c.link(v)) and vd(d):
                    result = True
                    break
        memo[key] = result
        return result

    return vd(k)
