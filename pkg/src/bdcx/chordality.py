"""Simplicial vertices and chordality of hypergraphs.

A hypergraph is chordal when every minor (any sequence of deletions and
contractions) has a simplicial vertex.  :func:`is_chordal` explores the full
minor closure with memoisation on the minimal reduction of each minor; it does
not assume that a greedy elimination order certifies chordality.

Two kinds of minor are exempt from the check.  A minor with no vertices has
nothing to test.  A minor obtained by contracting a looped vertex contains the
empty edge, so its minimal reduction is ``{∅}`` and every vertex is vacuously
simplicial; the same holds for all of its own minors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .complex import bits
from .errors import BudgetExceeded
from .hypergraph import Hypergraph, delete_vertex, minimal_reduction

DEFAULT_STATE_BUDGET = 1_000_000

State = tuple[int, frozenset]  # (vertex mask, minimal edge masks)


@dataclass
class ChordalityResult:
    chordal: bool
    # chordal: an elimination order of simplicial vertices of the input
    # not chordal: a minor with no simplicial vertex
    witness: object
    # for a failing minor: the (operation, vertex) steps that produce it
    path: list = field(default_factory=list)
    states: int = 0

    def __bool__(self) -> bool:
        return self.chordal


def is_simplicial_vertex(h: Hypergraph, v) -> bool:
    through = h.edges_through(v)
    for e1, e2 in combinations(through, 2):
        room = (e1 | e2) - {v}
        if not any(e3 <= room for e3 in h.edges):
            return False
    return True


def _reduce(edges) -> frozenset:
    edges = sorted(set(edges), key=lambda m: bin(m).count("1"))
    kept: list[int] = []
    for m in edges:
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return frozenset(kept)


def _simplicial_bit(vmask: int, edges: frozenset) -> int | None:
    """Lowest vertex bit that is simplicial in the (already minimal) family."""
    for i in bits(vmask):
        b = 1 << i
        through = [e for e in edges if e & b]
        ok = True
        for e1, e2 in combinations(through, 2):
            room = (e1 | e2) & ~b
            if not any(e3 & ~room == 0 for e3 in edges):
                ok = False
                break
        if ok:
            return b
    return None


def is_chordal(h: Hypergraph, budget: int = DEFAULT_STATE_BUDGET) -> ChordalityResult:
    """Decide chordality by exploring every minor of ``h``.

    Raises :class:`BudgetExceeded` when more than ``budget`` distinct reduced
    minors would have to be examined.
    """
    labels = h.vertices
    pos = {v: i for i, v in enumerate(labels)}

    def to_hypergraph(state: State) -> Hypergraph:
        vmask, edges = state
        return Hypergraph(
            [labels[i] for i in bits(vmask)],
            [[labels[i] for i in bits(e)] for e in edges],
        )

    if h.degenerate:
        return ChordalityResult(True, [], states=0)

    start: State = ((1 << len(labels)) - 1, _reduce(sum(1 << pos[x] for x in e) for e in h.edges))
    parent: dict[State, tuple] = {start: None}
    stack = [start]
    while stack:
        state = stack.pop()
        vmask, edges = state
        if not vmask:
            continue
        if _simplicial_bit(vmask, edges) is None:
            path = []
            s = state
            while parent[s] is not None:
                s, op, i = parent[s]
                path.append((op, labels[i]))
            return ChordalityResult(False, to_hypergraph(state), path[::-1], len(parent))
        for i in bits(vmask):
            b = 1 << i
            rest = vmask & ~b
            children = [("delete", (rest, frozenset(e for e in edges if not e & b)))]
            struck = [e & ~b for e in edges]
            if all(struck):
                children.append(("contract", (rest, _reduce(struck))))
            for op, child in children:
                if child not in parent:
                    if len(parent) >= budget:
                        raise BudgetExceeded("chordality minor exploration", budget)
                    parent[child] = (state, op, i)
                    stack.append(child)
    return ChordalityResult(True, elimination_order(h), states=len(parent))


def elimination_order(h: Hypergraph) -> list:
    """Greedy sequence of simplicial vertices, deleting each in turn.

    Raises ``ValueError`` if some stage has no simplicial vertex.
    """
    order = []
    cur = minimal_reduction(h)
    while cur.vertices:
        v = next((x for x in cur.vertices if is_simplicial_vertex(cur, x)), None)
        if v is None:
            raise ValueError("no simplicial vertex left to eliminate")
        order.append(v)
        cur = delete_vertex(cur, v)
    return order
