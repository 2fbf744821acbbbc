"""Finite abstract simplicial complexes stored by their facets.

Faces are bit masks over a per-complex label table; the public surface speaks
in frozensets of labels.  The complex ``{∅}`` (a single empty facet) is the
(-1)-sphere and the unit for :func:`join`.  The void complex (no faces at all)
exists but is only produced on explicit request.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator

from .errors import LabelCollision, UnknownVertex

Label = Hashable
Face = frozenset


def sort_labels(labels: Iterable[Label]) -> list:
    """Sort labels naturally, falling back to ``repr`` order for mixed types."""
    labels = list(labels)
    try:
        return sorted(labels)
    except TypeError:
        return sorted(labels, key=repr)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def maximal_masks(masks: Iterable[int]) -> frozenset[int]:
    """Inclusion-maximal members of a family of bit masks."""
    kept: list[int] = []
    for m in sorted(set(masks), key=popcount, reverse=True):
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return frozenset(kept)


@dataclass(frozen=True, order=True)
class SuspensionPoint:
    """Fresh cone point introduced by :func:`suspension`."""

    level: int
    side: int

    def __repr__(self) -> str:
        return f"<S{self.level}{'-+'[self.side]}>"


class SimplicialComplex:
    __slots__ = ("labels", "_index", "_masks")

    def __init__(self, labels: Iterable[Label], masks: Iterable[int]):
        # Callers guarantee that masks form an antichain over ``labels``.
        self.labels: tuple = tuple(labels)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self._masks = frozenset(masks)

    # -- construction ---------------------------------------------------

    @classmethod
    def from_faces(cls, candidates: Iterable[Iterable[Label]]) -> SimplicialComplex:
        """Complex generated by ``candidates``; no candidates gives ``{∅}``."""
        faces = [frozenset(c) for c in candidates]
        labels = sort_labels(set().union(*faces)) if faces else []
        index = {lab: i for i, lab in enumerate(labels)}
        masks = [sum(1 << index[x] for x in f) for f in faces] or [0]
        return cls(labels, maximal_masks(masks))

    @classmethod
    def void(cls) -> SimplicialComplex:
        return cls((), ())

    @classmethod
    def simplex(cls, vertices: Iterable[Label]) -> SimplicialComplex:
        return cls.from_faces([vertices])

    # -- accessors ------------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self._masks

    @property
    def vertices(self) -> tuple:
        return self.labels

    @property
    def facet_masks(self) -> frozenset[int]:
        return self._masks

    @property
    def facets(self) -> frozenset[frozenset]:
        return frozenset(self.face_of(m) for m in self._masks)

    def facet_list(self) -> list[tuple]:
        """Facets as label tuples in a deterministic order (size desc, then lexicographic)."""
        ordered = sorted(self._masks, key=lambda m: (-popcount(m), [i for i in bits(m)]))
        return [tuple(self.labels[i] for i in bits(m)) for m in ordered]

    @property
    def dimension(self) -> int:
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(popcount(m) for m in self._masks) - 1

    def mask_of(self, face: Iterable[Label]) -> int:
        mask = 0
        for x in face:
            try:
                mask |= 1 << self._index[x]
            except KeyError:
                raise UnknownVertex(x) from None
        return mask

    def face_of(self, mask: int) -> frozenset:
        return frozenset(self.labels[i] for i in bits(mask))

    def __contains__(self, face: Iterable[Label]) -> bool:
        try:
            m = self.mask_of(face)
        except UnknownVertex:
            return False
        return any(m & ~f == 0 for f in self._masks)

    def face_masks(self) -> dict[int, list[int]]:
        """All faces grouped by cardinality, each group sorted."""
        seen: set[int] = set()
        for f in self._masks:
            sub = f
            while True:
                seen.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        by_size: dict[int, list[int]] = {}
        for m in seen:
            by_size.setdefault(popcount(m), []).append(m)
        return {k: sorted(v) for k, v in sorted(by_size.items())}

    def faces(self) -> Iterator[frozenset]:
        for group in self.face_masks().values():
            for m in group:
                yield self.face_of(m)

    def f_vector(self) -> list[int]:
        """Face counts by cardinality, starting with the empty face."""
        groups = self.face_masks()
        return [len(groups.get(k, ())) for k in range(max(groups, default=-1) + 1)]

    # -- local structure ------------------------------------------------

    def _vertex_bit(self, v: Label) -> int:
        if v not in self._index:
            raise UnknownVertex(v)
        return 1 << self._index[v]

    def deletion(self, v: Label) -> SimplicialComplex:
        """Faces not containing ``v``."""
        b = self._vertex_bit(v)
        return self._relabelled(maximal_masks(m & ~b for m in self._masks))

    def link(self, v: Label) -> SimplicialComplex:
        b = self._vertex_bit(v)
        return self._relabelled(maximal_masks(m & ~b for m in self._masks if m & b))

    def star(self, v: Label) -> SimplicialComplex:
        b = self._vertex_bit(v)
        return self._relabelled(frozenset(m for m in self._masks if m & b))

    def is_cone_with_apex(self, v: Label) -> bool:
        b = self._vertex_bit(v)
        return all(m & b for m in self._masks)

    def _relabelled(self, masks: frozenset[int]) -> SimplicialComplex:
        """Shrink the label table to the vertices actually used by ``masks``."""
        used = 0
        for m in masks:
            used |= m
        keep = list(bits(used))
        if len(keep) == len(self.labels):
            return SimplicialComplex(self.labels, masks)
        remap = {old: new for new, old in enumerate(keep)}
        new_masks = [sum(1 << remap[i] for i in bits(m)) for m in masks]
        return SimplicialComplex([self.labels[i] for i in keep], new_masks)

    # -- dunder ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __repr__(self) -> str:
        if self.is_void:
            return "SimplicialComplex(void)"
        body = ", ".join("{" + ", ".join(map(repr, f)) + "}" for f in self.facet_list())
        return f"SimplicialComplex([{body}])"


def from_faces(candidates: Iterable[Iterable[Label]]) -> SimplicialComplex:
    return SimplicialComplex.from_faces(candidates)


def join(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    """Join of two complexes on disjoint vertex sets.

    The void complex is absorbing and ``{∅}`` is the unit.
    """
    clash = set(k1.labels) & set(k2.labels)
    if clash:
        raise LabelCollision(f"join operands share labels: {sort_labels(clash)}")
    if k1.is_void or k2.is_void:
        return SimplicialComplex.void()
    labels = sort_labels(k1.labels + k2.labels)
    index = {lab: i for i, lab in enumerate(labels)}

    def lift(k: SimplicialComplex) -> list[int]:
        pos = [1 << index[lab] for lab in k.labels]
        return [sum(pos[i] for i in bits(m)) for m in k.facet_masks]

    return SimplicialComplex(labels, [a | b for a in lift(k1) for b in lift(k2)])


def suspension(k: SimplicialComplex) -> SimplicialComplex:
    """Join with a two-point complex on fresh labels."""
    level = 1 + max((x.level for x in k.labels if isinstance(x, SuspensionPoint)), default=-1)
    poles = SimplicialComplex.from_faces([[SuspensionPoint(level, 0)], [SuspensionPoint(level, 1)]])
    return join(k, poles)


def is_cone_with_apex(k: SimplicialComplex, v: Label) -> bool:
    return k.is_cone_with_apex(v)
