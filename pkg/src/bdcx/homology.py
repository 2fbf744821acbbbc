"""Reduced integral homology of simplicial complexes via integer Smith reduction.

Arithmetic is carried out on Python integers, so intermediate coefficient
growth can never overflow.  The only capacity limit is the number of faces.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from math import gcd

from .complex import SimplicialComplex, bits
from .errors import ComplexTooLarge, PreconditionError

DEFAULT_MAX_FACES = 1_000_000


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology by dimension: ``{dim: (betti, torsion_factors)}``.

    Dimensions whose group vanishes are not stored.
    """

    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {
            int(d): (int(b), tuple(t))
            for d, (b, t) in sorted(self.entries.items())
            if b or t
        }
        object.__setattr__(self, "entries", clean)

    def betti(self) -> dict[int, int]:
        return {d: b for d, (b, _) in self.entries.items() if b}

    def torsion(self) -> dict[int, tuple[int, ...]]:
        return {d: t for d, (_, t) in self.entries.items() if t}

    @property
    def is_torsion_free(self) -> bool:
        return not self.torsion()

    @property
    def is_trivial(self) -> bool:
        return not self.entries

    def shifted(self, k: int) -> HomologyProfile:
        return HomologyProfile({d + k: v for d, v in self.entries.items()})

    def to_json(self) -> dict[str, list[int]]:
        return {str(d): [b, *t] for d, (b, t) in self.entries.items()}


def _pick_pivot(rows: dict[int, dict[int, int]]) -> tuple[int, int]:
    best = None
    for i, row in rows.items():
        for c, a in row.items():
            if a in (1, -1):
                return i, c
            if best is None or abs(a) < best[0]:
                best = (abs(a), i, c)
    return best[1], best[2]


def smith_diagonal(rows: list[dict[int, int]]) -> list[int]:
    """Nonzero diagonal of a Smith-type reduction of a sparse integer matrix.

    ``rows`` maps column index to entry.  The returned absolute values have the
    same product structure as the invariant factors but need not be in
    divisibility order; see :func:`invariant_factors`.
    """
    active = {i: dict(r) for i, r in enumerate(rows) if r}
    cols: dict[int, set[int]] = defaultdict(set)
    for i, r in active.items():
        for c in r:
            cols[c].add(i)

    def add_multiple(target: int, source: int, q: int) -> None:
        # row[target] -= q * row[source]
        t = active[target]
        for c, a in active[source].items():
            v = t.get(c, 0) - q * a
            if v:
                if c not in t:
                    cols[c].add(target)
                t[c] = v
            elif c in t:
                del t[c]
                cols[c].discard(target)
        if not t:
            del active[target]

    diag: list[int] = []
    while active:
        pi, pc = _pick_pivot(active)
        while True:
            p = active[pi][pc]
            # Clear the pivot column with row operations.
            leftovers = []
            for i in sorted(cols[pc] - {pi}):
                add_multiple(i, pi, active[i][pc] // p)
                if i in active and pc in active[i]:
                    leftovers.append(i)
            if leftovers:
                pi = min(leftovers, key=lambda i: abs(active[i][pc]))
                continue
            # Column pc now meets only the pivot row, so column operations
            # against it touch nothing else.
            row = active[pi]
            for c in [c for c in row if c != pc]:
                r = row[c] - (row[c] // p) * p
                if r:
                    row[c] = r
                else:
                    del row[c]
                    cols[c].discard(pi)
            if len(row) == 1:
                break
            pc = min((c for c in row if c != pc), key=lambda c: abs(row[c]))
        diag.append(abs(p))
        for c in active[pi]:
            cols[c].discard(pi)
        del active[pi]
    return diag


def invariant_factors(diagonal: list[int]) -> list[int]:
    """Invariant factors > 1, in divisibility order, of a diagonal integer matrix."""
    d = [abs(x) for x in diagonal if abs(x) > 1]
    # after pass i, d[i] divides every later entry
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] // g * d[j]
    return [x for x in d if x > 1]


def boundary_rows(lower: list[int], upper: list[int]) -> list[dict[int, int]]:
    """Boundary map from faces ``upper`` to faces ``lower`` as sparse rows (one per upper face)."""
    index = {m: i for i, m in enumerate(lower)}
    rows = []
    for face in upper:
        row = {}
        for sign, b in enumerate(bits(face)):
            row[index[face & ~(1 << b)]] = -1 if sign % 2 else 1
        rows.append(row)
    return rows


def reduced_homology(k: SimplicialComplex, max_faces: int = DEFAULT_MAX_FACES) -> HomologyProfile:
    """Reduced integral homology of ``k``; ``{∅}`` has rank one in degree -1."""
    if k.is_void:
        raise PreconditionError("reduced homology of the void complex is undefined")
    bound = sum(1 << bin(m).count("1") for m in k.facet_masks)
    groups = k.face_masks() if bound <= 4 * max_faces else None
    if groups is None or sum(map(len, groups.values())) > max_faces:
        raise ComplexTooLarge(f"complex exceeds {max_faces} faces")

    top = max(groups)  # largest face cardinality
    # rank[s]: rank of the boundary from cardinality-s faces to cardinality-(s-1)
    rank = defaultdict(int)
    torsion: dict[int, list[int]] = {}
    for s in range(1, top + 1):
        diag = smith_diagonal(boundary_rows(groups[s - 1], groups[s]))
        rank[s] = len(diag)
        torsion[s - 2] = invariant_factors(diag)  # lands in dim (s-1)-1

    entries = {}
    for s in range(0, top + 1):
        dim = s - 1
        betti = len(groups[s]) - rank[s] - rank[s + 1]
        entries[dim] = (betti, tuple(torsion.get(dim, ())))
    return HomologyProfile(entries)
