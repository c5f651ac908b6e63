"""Graph classes: vertex decomposability, C5-freeness, chordality, bipartiteness.

Vertex decomposability is decided on induced subgraphs of one host graph.
Each subproblem is keyed by its vertex mask in host ids, so no relabelling
or isomorphism testing is needed.
"""
from __future__ import annotations

import dataclasses
from collections import deque
from itertools import combinations
from typing import Optional

from . import config
from .errors import InputError, ResourceError
from .graph import (
    Graph,
    connected_components,
    has_edge_within,
    maximal_independent_sets_within,
    members,
    popcount,
)


def _shedding_within(adj, s: int, x: int) -> bool:
    """Shedding test for ``x`` in the subgraph induced on ``s``.

    ``x`` sheds iff every maximal independent set of ``s - N[x]`` can be
    extended inside ``s - {x}``; only neighbours of ``x`` can extend it.
    """
    nbrs = members(adj[x] & s)
    rest = s & ~adj[x] & ~(1 << x)
    for f in maximal_independent_sets_within(adj, rest):
        if not any(not adj[y] & f for y in nbrs):
            return False
    return True


def is_shedding_vertex(g: Graph, x: int) -> bool:
    g.check_vertex(x)
    return _shedding_within(g.adj, g.vertices, x)


@dataclasses.dataclass(frozen=True)
class DecompositionCertificate:
    """One step of a vertex decomposition, in host vertex ids.

    A leaf (``shedding is None``) is an edgeless vertex set.  Otherwise
    ``deletion`` certifies ``vertices - {shedding}`` and ``link`` certifies
    ``vertices - N[shedding]``.
    """

    vertices: int
    shedding: Optional[int] = None
    deletion: Optional["DecompositionCertificate"] = None
    link: Optional["DecompositionCertificate"] = None

    @property
    def is_leaf(self) -> bool:
        return self.shedding is None

    def to_json(self) -> dict:
        if self.is_leaf:
            return {"vertices": members(self.vertices)}
        return {
            "vertices": members(self.vertices),
            "shedding": self.shedding,
            "deletion": self.deletion.to_json(),
            "link": self.link.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "DecompositionCertificate":
        verts = sum(1 << v for v in data["vertices"])
        if "shedding" not in data:
            return cls(verts)
        return cls(verts, data["shedding"], cls.from_json(data["deletion"]), cls.from_json(data["link"]))


def is_vertex_decomposable(
    g: Graph, memo: bool = True
) -> tuple[bool, Optional[DecompositionCertificate]]:
    """Decide vertex decomposability; on success also return a certificate.

    Candidates are tried in ascending id and the first one that works is
    recorded.  Disconnected graphs are handled by the recursive definition
    directly, without splitting into components.
    """
    cutoff = config.CUTOFFS.decomposability
    if g.n > cutoff:
        raise ResourceError(f"{g.n} vertices exceeds the decomposability cutoff {cutoff}")
    adj = g.adj
    table: dict[int, Optional[DecompositionCertificate]] = {}

    def solve(s: int) -> Optional[DecompositionCertificate]:
        if memo and s in table:
            return table[s]
        if not has_edge_within(g, s):
            cert = DecompositionCertificate(s)
        else:
            cert = None
            for x in members(s):
                if not adj[x] & s or not _shedding_within(adj, s, x):
                    continue
                deletion = solve(s & ~(1 << x))
                if deletion is None:
                    continue
                link = solve(s & ~adj[x] & ~(1 << x))
                if link is None:
                    continue
                cert = DecompositionCertificate(s, x, deletion, link)
                break
        if memo:
            table[s] = cert
        return cert

    cert = solve(g.vertices)
    return cert is not None, cert


def replay_certificate(g: Graph, cert: DecompositionCertificate, s: Optional[int] = None) -> bool:
    """Re-check a certificate from scratch.

    Shedding conditions are re-verified by scanning all independent subsets
    directly, without the maximal-independent-set enumerator.
    """
    s = g.vertices if s is None else s
    if cert.vertices != s:
        return False
    if cert.is_leaf:
        return not has_edge_within(g, s)
    x = cert.shedding
    if not (0 <= x < g.n and s >> x & 1):
        return False
    if not _shedding_by_scan(g, s, x):
        return False
    return replay_certificate(g, cert.deletion, s & ~(1 << x)) and replay_certificate(
        g, cert.link, s & ~g.adj[x] & ~(1 << x)
    )


def _independent(g: Graph, t: int) -> bool:
    return not any(g.adj[v] & t for v in members(t))


def _shedding_by_scan(g: Graph, s: int, x: int) -> bool:
    link = s & ~g.adj[x] & ~(1 << x)
    deletion = s & ~(1 << x)
    link_vertices = members(link)
    for k in range(len(link_vertices) + 1):
        for combo in combinations(link_vertices, k):
            t = sum(1 << v for v in combo)
            if not _independent(g, t):
                continue
            # maximal in the deletion means no vertex of it can be added
            if all(not _independent(g, t | 1 << v) for v in members(deletion & ~t)):
                return False
    return True


def find_induced_c5(g: Graph) -> Optional[tuple[int, ...]]:
    """Vertices of an induced 5-cycle in cyclic order, or ``None``."""
    adj = g.adj
    # a vertex of an induced C5 has degree at least 2
    pool = [v for v in range(g.n) if popcount(adj[v]) >= 2]
    for combo in combinations(pool, 5):
        s = sum(1 << v for v in combo)
        # 2-regular on five vertices forces a single 5-cycle
        if all(popcount(adj[v] & s) == 2 for v in combo):
            cycle = [combo[0]]
            prev = -1
            while len(cycle) < 5:
                nxt = [u for u in members(adj[cycle[-1]] & s) if u != prev][0]
                prev = cycle[-1]
                cycle.append(nxt)
            return tuple(cycle)
    return None


def is_c5_free(g: Graph) -> bool:
    return find_induced_c5(g) is None


def find_c5_subgraph(g: Graph) -> Optional[tuple[int, ...]]:
    """A 5-cycle in cyclic order, chords allowed, or ``None``.

    The cycle starts at its smallest vertex and every other vertex is larger.
    """
    adj = g.adj

    def walk(path: list[int], used: int) -> Optional[tuple[int, ...]]:
        start, last = path[0], path[-1]
        if len(path) == 5:
            return tuple(path) if adj[last] >> start & 1 else None
        above = adj[last] & ~used & ~((2 << start) - 1)
        for v in members(above):
            path.append(v)
            found = walk(path, used | 1 << v)
            if found:
                return found
            path.pop()
        return None

    for a in range(g.n):
        found = walk([a], 1 << a)
        if found:
            return found
    return None


C5_READINGS = ("induced", "subgraph")


def c5_witness(g: Graph, reading: str = "induced") -> Optional[tuple[int, ...]]:
    """Witness against C5-freeness: an induced 5-cycle, or any 5-cycle."""
    if reading == "induced":
        return find_induced_c5(g)
    if reading == "subgraph":
        return find_c5_subgraph(g)
    raise InputError(f"unknown C5 reading {reading!r}; choose from {', '.join(C5_READINGS)}")


def maximum_cardinality_search(g: Graph) -> list[int]:
    """MCS visiting order; its reverse is a perfect elimination ordering
    exactly when the graph is chordal.  Ties go to the smallest id."""
    weight = [0] * g.n
    visited = 0
    order = []
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not visited >> u & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        visited |= 1 << v
        for u in members(g.adj[v] & ~visited):
            weight[u] += 1
    return order


def is_perfect_elimination_ordering(g: Graph, order: list[int]) -> bool:
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in members(g.adj[v]) if position[u] > position[v]]
        if len(later) < 2:
            continue
        parent = min(later, key=position.__getitem__)
        rest = sum(1 << u for u in later if u != parent)
        if rest & ~g.adj[parent]:
            return False
    return True


def is_chordal(g: Graph) -> bool:
    return is_perfect_elimination_ordering(g, maximum_cardinality_search(g)[::-1])


def bipartition(g: Graph) -> Optional[tuple[int, int]]:
    """Two colour classes by breadth-first layering, or ``None``."""
    colour = [-1] * g.n
    for start in range(g.n):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in members(g.adj[v]):
                if colour[u] < 0:
                    colour[u] = 1 - colour[v]
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return None
    left = sum(1 << v for v in range(g.n) if colour[v] == 0)
    return left, g.vertices & ~left


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(connected_components(g))


def dominated_neighbor(g: Graph, x: int) -> Optional[int]:
    """Smallest ``y`` in ``N(x)`` with ``N[y]`` inside ``N[x]``."""
    g.check_vertex(x)
    closed_x = g.adj[x] | 1 << x
    for y in members(g.adj[x]):
        if (g.adj[y] | 1 << y) & ~closed_x == 0:
            return y
    return None
