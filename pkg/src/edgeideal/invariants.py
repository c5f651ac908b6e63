"""Combinatorial invariants of graphs attached to edge ideals.

Covers the induced-matching number ``c_G`` (pairwise 3-disjoint edges), the
bouquet numbers ``d_G`` (strongly disjoint families) and ``d'_G``
(semi-strongly disjoint families), the big height, domination and edgewise
domination numbers, and unmixedness.

For a root set ``Z`` every vertex of ``N(Z)`` can be hung on some root as a
flower, so both bouquet numbers reduce to a maximum of ``|N(Z)|`` over root
sets that admit the required stems.  The fast engines use that reduction;
the ``*_brute`` functions enumerate bouquet families literally and serve
as their independent check.
"""
from __future__ import annotations

import dataclasses
from itertools import combinations, product
from typing import Optional

from . import config
from .clique import maximum_clique
from .errors import DomainError, InputError, ResourceError
from .graph import (
    Edge,
    Graph,
    independent_sets_within,
    maximal_independent_sets,
    members,
    minimal_vertex_covers,
    neighborhood_of_set,
    popcount,
)


def _check_search(g: Graph) -> None:
    cutoff = config.CUTOFFS.search
    if g.n > cutoff:
        raise ResourceError(f"{g.n} vertices exceeds the search cutoff {cutoff}")


def _check_edge(g: Graph, e) -> Edge:
    u, v = e
    if not g.has_edge(u, v):
        raise InputError(f"{{{u}, {v}}} is not an edge")
    return (min(u, v), max(u, v))


# ---------------------------------------------------------------------------
# 3-disjoint edges
# ---------------------------------------------------------------------------

def _three_disjoint(adj, e: Edge, f: Edge) -> bool:
    a, b = e
    c, d = f
    if len({a, b, c, d}) < 4:
        return False
    return not ((adj[a] | adj[b]) & ((1 << c) | (1 << d)))


def three_disjoint(g: Graph, e, f) -> bool:
    """True iff ``e`` and ``f`` induce exactly two disjoint edges."""
    return _three_disjoint(g.adj, _check_edge(g, e), _check_edge(g, f))


def max_three_disjoint_edges(g: Graph) -> list[Edge]:
    """A maximum pairwise 3-disjoint edge set (an induced matching)."""
    edges = g.edges
    cutoff = config.CUTOFFS.clique_edges
    if len(edges) > cutoff:
        raise ResourceError(f"{len(edges)} edges exceeds the clique-search cutoff {cutoff}")
    compat = [0] * len(edges)
    for i, j in combinations(range(len(edges)), 2):
        if _three_disjoint(g.adj, edges[i], edges[j]):
            compat[i] |= 1 << j
            compat[j] |= 1 << i
    return [edges[i] for i in members(maximum_clique(compat))]


def c_number(g: Graph) -> int:
    return len(max_three_disjoint_edges(g))


# ---------------------------------------------------------------------------
# bouquets
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class Bouquet:
    root: int
    flowers: int  # vertex mask

    def __post_init__(self):
        if not self.flowers:
            raise InputError("a bouquet needs at least one flower")
        if self.flowers >> self.root & 1:
            raise InputError("the root cannot be a flower")

    @property
    def vertex_set(self) -> int:
        return self.flowers | 1 << self.root

    @property
    def stems(self) -> list[Edge]:
        return [(min(self.root, w), max(self.root, w)) for w in members(self.flowers)]

    def to_json(self) -> dict:
        return {"root": self.root, "flowers": members(self.flowers)}


@dataclasses.dataclass(frozen=True)
class BouquetFamily:
    host: Graph
    bouquets: tuple

    def __post_init__(self):
        used = 0
        for b in self.bouquets:
            if b.flowers & ~self.host.adj[b.root]:
                raise InputError(f"bouquet at {b.root} has a flower that is not adjacent to it")
            if used & b.vertex_set:
                raise InputError("bouquets in a family must be vertex-disjoint")
            used |= b.vertex_set

    @property
    def roots(self) -> int:
        return sum(1 << b.root for b in self.bouquets)

    @property
    def flowers(self) -> int:
        out = 0
        for b in self.bouquets:
            out |= b.flowers
        return out

    @property
    def stems(self) -> list[Edge]:
        return sorted(e for b in self.bouquets for e in b.stems)

    @property
    def size(self) -> int:
        return popcount(self.flowers)

    def is_semi_strongly_disjoint(self) -> bool:
        return not any(self.host.adj[r] & self.roots for r in members(self.roots))

    def stem_system(self) -> Optional[list[Edge]]:
        """One stem per bouquet, pairwise 3-disjoint, or ``None``."""
        choices = [b.stems for b in self.bouquets]
        for pick in product(*choices):
            if all(_three_disjoint(self.host.adj, e, f) for e, f in combinations(pick, 2)):
                return list(pick)
        return None

    def is_strongly_disjoint(self) -> bool:
        return self.stem_system() is not None

    def to_json(self) -> dict:
        return {
            "bouquets": [b.to_json() for b in self.bouquets],
            "roots": members(self.roots),
            "flowers": members(self.flowers),
            "size": self.size,
        }


def _family_from_assignment(g: Graph, owner: dict) -> BouquetFamily:
    """Build a family from ``{flower: root}``."""
    by_root: dict[int, int] = {}
    for w, r in owner.items():
        by_root[r] = by_root.get(r, 0) | 1 << w
    return BouquetFamily(g, tuple(Bouquet(r, by_root[r]) for r in sorted(by_root)))


def _hang_remaining(g: Graph, roots: int, owner: dict) -> dict:
    """Attach every unused vertex of ``N(roots)`` to its smallest adjacent root."""
    taken = 0
    for w in owner:
        taken |= 1 << w
    for w in members(neighborhood_of_set(g, roots) & ~taken):
        owner[w] = members(g.adj[w] & roots)[0]
    return owner


def _saturating_matching(g: Graph, roots: list[int]) -> Optional[dict]:
    """Kuhn's augmenting paths: ``{flower: root}`` covering every root."""
    match: dict[int, int] = {}

    def augment(r: int, seen: list) -> bool:
        for w in members(g.adj[r]):
            if seen[0] >> w & 1:
                continue
            seen[0] |= 1 << w
            if w not in match or augment(match[w], seen):
                match[w] = r
                return True
        return False

    for r in roots:
        if not augment(r, [0]):
            return None
    return match


def d_prime_family(g: Graph) -> Optional[BouquetFamily]:
    """Optimal semi-strongly disjoint family via the matching formulation.

    ``d'_G`` is the maximum of ``|N(Z)|`` over independent ``Z`` that can be
    matched into ``N(Z)``.  Ties go to the smallest root mask.  Returns
    ``None`` when the optimum is the empty family.
    """
    _check_search(g)
    best, best_owner, best_roots = 0, None, 0
    for z in sorted(independent_sets_within(g.adj, g.vertices)):
        if not z:
            continue
        size = popcount(neighborhood_of_set(g, z))
        if size <= best:
            continue
        match = _saturating_matching(g, members(z))
        if match is not None:
            best, best_owner, best_roots = size, match, z
    if best_owner is None:
        return None
    return _family_from_assignment(g, _hang_remaining(g, best_roots, dict(best_owner)))


def d_prime_number(g: Graph, method: str = "matching") -> int:
    """``d'_G``; ``method`` is ``"matching"`` (default) or ``"brute"``."""
    if method == "brute":
        return d_prime_brute(g)[0]
    if method != "matching":
        raise InputError(f"unknown method {method!r}")
    fam = d_prime_family(g)
    return fam.size if fam else 0


def _stem_system(g: Graph, roots: list[int], root_mask: int) -> Optional[list[Edge]]:
    """Backtracking search for pairwise 3-disjoint stems, one per root."""
    adj = g.adj
    # a stem flower adjacent to a second root can never be 3-disjoint from that root's stem
    options = [[w for w in members(adj[r]) if adj[w] & root_mask == 1 << r] for r in roots]
    chosen: list[Edge] = []

    def place(i: int, used: int, blocked: int) -> bool:
        if i == len(roots):
            return True
        r = roots[i]
        if blocked >> r & 1:
            return False
        for w in options[i]:
            bit = 1 << w
            if (used | blocked) & bit:
                continue
            pair = bit | 1 << r
            chosen.append((min(r, w), max(r, w)))
            if place(i + 1, used | pair, blocked | adj[r] | adj[w]):
                return True
            chosen.pop()
        return False

    return list(chosen) if place(0, 0, 0) else None


def d_family(g: Graph) -> Optional[BouquetFamily]:
    """Optimal strongly disjoint family.

    Root sets are scanned in ascending mask order; the stem system for a
    candidate is found by backtracking, then the rest of ``N(Z)`` is hung
    on the smallest adjacent root.
    """
    _check_search(g)
    best, best_stems, best_roots = 0, None, 0
    for z in sorted(independent_sets_within(g.adj, g.vertices)):
        if not z:
            continue
        size = popcount(neighborhood_of_set(g, z))
        if size <= best:
            continue
        stems = _stem_system(g, members(z), z)
        if stems is not None:
            best, best_stems, best_roots = size, stems, z
    if best_stems is None:
        return None
    owner = {}
    for u, v in best_stems:
        if best_roots >> u & 1:
            owner[v] = u
        else:
            owner[u] = v
    return _family_from_assignment(g, _hang_remaining(g, best_roots, owner))


def d_number(g: Graph, method: str = "stems") -> int:
    """``d_G``; ``method`` is ``"stems"`` (default) or ``"brute"``."""
    if method == "brute":
        return d_brute(g)[0]
    if method != "stems":
        raise InputError(f"unknown method {method!r}")
    fam = d_family(g)
    return fam.size if fam else 0


def _families(g: Graph, roots: int) -> list[tuple[int, int, Optional[tuple]]]:
    """Every bouquet family whose root set is exactly ``roots``.

    Each vertex outside ``roots`` with a neighbour in ``roots`` is either
    left out or hung on one adjacent root.  Returns ``(count, flowers,
    chain)`` where ``chain`` is the ``(flower, root)`` assignment as a
    linked list ``((flower, root), rest)``; every root owns a flower.
    Partial assignments are dropped only once some root can no longer
    receive a flower, so no family is missed.
    """
    slots = [(v, g.adj[v] & roots) for v in range(g.n) if not roots >> v & 1 and g.adj[v] & roots]
    reach = [0] * (len(slots) + 1)
    for i in range(len(slots) - 1, -1, -1):
        reach[i] = reach[i + 1] | slots[i][1]
    if reach[0] != roots:
        return []
    partial = [(0, 0, 0, None)]
    for i, (v, near) in enumerate(slots):
        later = reach[i + 1]
        bit = 1 << v
        options = [(1 << r, (v, r)) for r in members(near)]
        step = []
        for owned, count, flowers, chain in partial:
            if not roots & ~(owned | later):
                step.append((owned, count, flowers, chain))
            for rbit, pair in options:
                owned_r = owned | rbit
                if not roots & ~(owned_r | later):
                    step.append((owned_r, count + 1, flowers | bit, (pair, chain)))
        partial = step
    return [(count, flowers, chain) for owned, count, flowers, chain in partial if owned == roots]


def _unchain(chain) -> dict:
    owner = {}
    while chain is not None:
        (w, r), chain = chain
        owner[w] = r
    return owner


def _best_over_families(g: Graph, root_sets, accept=None):
    best_key, best_chain = (0, 0, 0), None
    for roots in root_sets:
        for count, flowers, chain in _families(g, roots):
            key = (count, -roots, -flowers)
            if key <= best_key:
                continue
            if accept is not None and not accept(chain):
                continue
            best_key, best_chain = key, chain
    if best_chain is None:
        return 0, None
    return best_key[0], _family_from_assignment(g, _unchain(best_chain))


def d_prime_brute(g: Graph) -> tuple[int, Optional[BouquetFamily]]:
    """``d'_G`` by enumerating every family with an independent root set.

    Ties go to the lexicographically smallest (root mask, flower mask).
    """
    _check_search(g)
    roots = (z for z in independent_sets_within(g.adj, g.vertices) if z)
    return _best_over_families(g, roots)


def d_brute(g: Graph) -> tuple[int, Optional[BouquetFamily]]:
    """``d_G`` by enumerating every family and testing for a stem system.

    Root sets are not assumed independent.  Ties as in :func:`d_prime_brute`.
    """
    _check_search(g)

    def strongly(chain):
        return _family_from_assignment(g, _unchain(chain)).is_strongly_disjoint()

    return _best_over_families(g, range(1, 1 << g.n), strongly)


# ---------------------------------------------------------------------------
# covers, domination, unmixedness
# ---------------------------------------------------------------------------

def bight(g: Graph) -> int:
    """Largest minimal vertex cover; 0 for edgeless graphs."""
    return max(popcount(c) for c in minimal_vertex_covers(g))


def minimum_dominating_set(g: Graph) -> int:
    _check_search(g)
    full = g.vertices
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            a = 0
            for v in combo:
                a |= 1 << v
            if (a | neighborhood_of_set(g, a)) == full:
                return a
    raise AssertionError("the full vertex set always dominates")


def domination_number(g: Graph) -> int:
    """Smallest dominating set; an edgeless graph on n vertices gives n."""
    return popcount(minimum_dominating_set(g))


def minimum_edgewise_dominating_set(g: Graph, closed: bool = False) -> list[Edge]:
    """Fewest edges whose endpoints' neighbours cover every vertex.

    With ``closed=True`` the endpoints themselves also count as covered.
    Every endpoint is a neighbour of its partner, so both readings give
    the same sets; the flag exists to make that checkable.
    """
    if g.isolated_vertices():
        raise DomainError("edgewise domination is undefined with isolated vertices")
    _check_search(g)
    full = g.vertices
    edges = g.edges
    for k in range(len(edges) + 1):
        for combo in combinations(edges, k):
            ends = 0
            for u, v in combo:
                ends |= 1 << u | 1 << v
            reach = neighborhood_of_set(g, ends)
            if closed:
                reach |= ends
            if reach == full:
                return list(combo)
    raise AssertionError("all edges together are edgewise dominant")


def edgewise_domination_number(g: Graph, closed: bool = False) -> int:
    return len(minimum_edgewise_dominating_set(g, closed))


def min_max_maximal_independent(g: Graph) -> tuple[int, int]:
    sizes = [popcount(f) for f in maximal_independent_sets(g)]
    return min(sizes), max(sizes)


def is_unmixed(g: Graph) -> bool:
    lo, hi = min_max_maximal_independent(g)
    return lo == hi


def is_edgewise_dominant(g: Graph, edges, closed: bool = False) -> bool:
    ends = 0
    for u, v in edges:
        ends |= 1 << u | 1 << v
    reach = neighborhood_of_set(g, ends) | (ends if closed else 0)
    return reach == g.vertices


def is_dominating(g: Graph, a: int) -> bool:
    return (a | neighborhood_of_set(g, a)) == g.vertices


def is_vertex_cover(g: Graph, c: int) -> bool:
    return all(c >> u & 1 or c >> v & 1 for u, v in g.edges)


def is_minimal_vertex_cover(g: Graph, c: int) -> bool:
    return is_vertex_cover(g, c) and not any(is_vertex_cover(g, c & ~(1 << v)) for v in members(c))
