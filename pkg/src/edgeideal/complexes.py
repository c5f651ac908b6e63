"""Simplicial complexes, exact reduced homology and Hochster Betti tables.

This is the homological oracle.  Betti numbers of ``R/I`` for a squarefree
monomial ideal ``I`` come from Hochster's formula

    beta_{i,j}(R/I) = sum_{|W| = j} dim H~_{j-i-1}(Delta|_W; k)

where ``Delta`` is the Stanley--Reisner complex of ``I``.  Homology ranks are
computed from boundary matrices with exact arithmetic.
"""
from __future__ import annotations

import dataclasses
from itertools import combinations
from typing import Iterable, Union

from . import config
from .errors import DomainError, ResourceError
from .graph import Graph, maximal_independent_sets, members, popcount
from .ideals import SquarefreeMonomialIdeal, ideal_of_graph, minimalize
from .linalg import check_field_char, sparse_rank


def _maximal(sets: Iterable[int]) -> tuple[int, ...]:
    kept: list[int] = []
    for s in sorted(set(sets), key=lambda m: (-popcount(m), m)):
        if not any(k & s == s for k in kept):
            kept.append(s)
    return tuple(sorted(kept))


class SimplicialComplex:
    """Complex on vertices ``0..n-1`` given by its facets.

    ``facets == ()`` is the void complex (no faces at all); ``facets ==
    (0,)`` is the complex whose only face is the empty set.
    """

    __slots__ = ("n", "facets", "_faces")

    def __init__(self, n: int, facets: Iterable[int]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "facets", _maximal(facets))
        object.__setattr__(self, "_faces", None)

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and (self.n, self.facets) == (other.n, other.facets)

    def __hash__(self):
        return hash((self.n, self.facets))

    def __repr__(self):
        return f"SimplicialComplex(n={self.n}, facets={[members(f) for f in self.facets]})"

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        if self.is_void:
            raise DomainError("the void complex has no dimension")
        return max(popcount(f) for f in self.facets) - 1

    def faces(self) -> list[int]:
        """All faces, sorted by (size, mask)."""
        if self._faces is None:
            budget = config.CUTOFFS.face_budget
            seen: set[int] = set()
            for f in self.facets:
                _subsets_into(f, seen, budget)
            object.__setattr__(self, "_faces", sorted(seen, key=lambda m: (popcount(m), m)))
        return self._faces

    def f_vector(self) -> list[int]:
        """Face counts by size; entry ``k`` counts faces with ``k`` vertices."""
        if self.is_void:
            return []
        counts = [0] * (self.dim + 2)
        for f in self.faces():
            counts[popcount(f)] += 1
        return counts

    def restrict(self, w: int) -> "SimplicialComplex":
        """Induced subcomplex on the vertex set ``w``."""
        return SimplicialComplex(self.n, [f & w for f in self.facets])


def _subsets_into(facet: int, seen: set, budget) -> None:
    sub = facet
    while True:
        seen.add(sub)
        if budget is not None and len(seen) > budget:
            raise ResourceError(f"complex has more than {budget} faces")
        if sub == 0:
            break
        sub = (sub - 1) & facet


def independence_complex(g: Graph) -> SimplicialComplex:
    return SimplicialComplex(g.n, maximal_independent_sets(g))


def stanley_reisner_complex(ideal: SquarefreeMonomialIdeal) -> SimplicialComplex:
    """Complex of all vertex sets containing no generator support."""
    if ideal.is_unit:
        raise DomainError("the unit ideal has the void Stanley-Reisner complex")
    n = ideal.n
    if n > config.CUTOFFS.enumeration:
        raise ResourceError(f"{n} variables exceeds the enumeration cutoff {config.CUTOFFS.enumeration}")
    # facets are the complements of the minimal transversals of the generators
    full = (1 << n) - 1
    transversals = ideal.alexander_dual()
    if transversals.is_unit:
        return SimplicialComplex(n, [full])
    return SimplicialComplex(n, [full ^ t for t in transversals.generators])


# ---------------------------------------------------------------------------
# reduced homology
# ---------------------------------------------------------------------------

def _boundary_rank(faces_hi: list[int], faces_lo: list[int], field_char: int) -> int:
    """Rank of the boundary map from faces of size k to faces of size k-1.

    Orientation follows ascending vertex order: deleting the i-th smallest
    vertex carries the sign (-1)**i.
    """
    if not faces_hi or not faces_lo:
        return 0
    index = {f: i for i, f in enumerate(faces_lo)}
    rows = []
    for f in faces_hi:
        row = {}
        sign = 1
        rest = f
        while rest:
            low = rest & -rest
            row[index[f ^ low]] = sign
            sign = -sign
            rest ^= low
        rows.append(row)
    return sparse_rank(rows, field_char)


def _reduced_homology_of_faces(by_size: list[list[int]], field_char: int) -> dict[int, int]:
    """Ranks of H~_d for d = -1 .. top, from faces grouped by vertex count."""
    top = len(by_size) - 1
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        ranks[k] = _boundary_rank(by_size[k], by_size[k - 1], field_char)
    out = {}
    for k in range(0, top + 1):
        out[k - 1] = len(by_size[k]) - ranks[k] - ranks[k + 1]
    return out


def _group_by_size(faces: Iterable[int]) -> list[list[int]]:
    by_size: list[list[int]] = []
    for f in faces:
        k = popcount(f)
        while len(by_size) <= k:
            by_size.append([])
        by_size[k].append(f)
    return by_size


def reduced_homology_ranks(c: SimplicialComplex, field_char: int = 0) -> dict[int, int]:
    """``{d: dim H~_d(c; k)}`` for ``d = -1 .. dim c`` (zeros included)."""
    field_char = check_field_char(field_char)
    if c.is_void:
        raise DomainError("reduced homology of the void complex is not defined here")
    return _reduced_homology_of_faces(_group_by_size(c.faces()), field_char)


def _is_cone(faces: list[int], w: int) -> bool:
    # faces containing v inject into faces missing v, so equal counts mean
    # every face extends by v
    total = len(faces)
    if total % 2:
        return False
    for v in members(w):
        bit = 1 << v
        if 2 * sum(1 for f in faces if f & bit) == total:
            return True
    return False


# ---------------------------------------------------------------------------
# Betti tables
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers of ``R/I``; only nonzero entries are stored."""

    n: int
    entries: dict
    field_char: int = 0

    def __post_init__(self):
        if self.entries.get((0, 0)) != 1:
            raise ValueError("beta_{0,0} of R/I must be 1")
        for (i, j), b in self.entries.items():
            if b <= 0:
                raise ValueError(f"stored Betti number beta_{{{i},{j}}} must be positive")
            if i == 0 and j != 0:
                raise ValueError("R/I has a single generator in degree 0")
            if j > self.n or i < 0 or j < 0:
                raise ValueError(f"entry ({i}, {j}) out of range for {self.n} variables")

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def reg(self) -> int:
        return max(j - i for i, j in self.entries)

    @property
    def depth(self) -> int:
        """Auslander--Buchsbaum: ``n - pd``."""
        return self.n - self.pd

    def rows(self) -> list[tuple[int, int, int]]:
        return [(i, j, self.entries[i, j]) for i, j in sorted(self.entries)]

    def to_text(self) -> str:
        return "".join(f"{i} {j} {b}\n" for i, j, b in self.rows())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "field_char": self.field_char,
            "entries": [list(r) for r in self.rows()],
            "pd": self.pd,
            "reg": self.reg,
            "depth": self.depth,
        }

    @classmethod
    def from_text(cls, text: str, n: int, field_char: int = 0) -> "BettiTable":
        entries = {}
        for line in text.splitlines():
            if line.strip():
                i, j, b = (int(t) for t in line.split())
                entries[i, j] = b
        return cls(n, entries, field_char)


def hochster_contributions(ideal: SquarefreeMonomialIdeal, field_char: int = 0):
    """Yield ``(W, {d: rank})`` for every ``W`` with nonzero reduced homology.

    ``W`` runs over subsets of the variables in ascending size, then mask.
    """
    field_char = check_field_char(field_char)
    n = ideal.n
    cutoff = config.CUTOFFS.oracle
    if n > cutoff:
        raise ResourceError(f"{n} variables exceeds the Hochster oracle cutoff {cutoff}")
    delta = stanley_reisner_complex(ideal)
    faces = delta.faces()
    for j in range(n + 1):
        for combo in combinations(range(n), j):
            w = 0
            for v in combo:
                w |= 1 << v
            inside = [f for f in faces if f & w == f]
            if j and _is_cone(inside, w):
                continue
            ranks = _reduced_homology_of_faces(_group_by_size(inside), field_char)
            nonzero = {d: r for d, r in ranks.items() if r}
            if nonzero:
                yield w, nonzero


def hochster_betti_table(ideal: SquarefreeMonomialIdeal, field_char: int = 0) -> BettiTable:
    entries: dict = {}
    for w, ranks in hochster_contributions(ideal, field_char):
        j = popcount(w)
        for d, r in ranks.items():
            i = j - d - 1
            entries[i, j] = entries.get((i, j), 0) + r
    return BettiTable(ideal.n, entries, field_char)


def betti_table(obj: Union[Graph, SquarefreeMonomialIdeal], field_char: int = 0) -> BettiTable:
    """Betti table of ``R/I`` for an ideal, or of ``R/I(G)`` for a graph."""
    if isinstance(obj, Graph):
        obj = ideal_of_graph(obj)
    return hochster_betti_table(obj, field_char)


def regularity(obj, field_char: int = 0) -> int:
    return betti_table(obj, field_char).reg


def projective_dimension(obj, field_char: int = 0) -> int:
    return betti_table(obj, field_char).pd


def depth(obj, field_char: int = 0) -> int:
    return betti_table(obj, field_char).depth


def krull_dimension(obj) -> int:
    """Largest independent set (graph) or face (ideal); no homology used."""
    if isinstance(obj, Graph):
        sets = maximal_independent_sets(obj)
        return max(popcount(f) for f in sets)
    return stanley_reisner_complex(obj).dim + 1


__all__ = [
    "BettiTable",
    "SimplicialComplex",
    "SquarefreeMonomialIdeal",
    "betti_table",
    "depth",
    "hochster_betti_table",
    "hochster_contributions",
    "ideal_of_graph",
    "independence_complex",
    "krull_dimension",
    "minimalize",
    "projective_dimension",
    "reduced_homology_ranks",
    "regularity",
    "stanley_reisner_complex",
]
