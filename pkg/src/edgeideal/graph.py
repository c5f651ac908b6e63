"""Immutable simple graphs on vertices ``0..n-1`` with bitmask vertex sets.

A vertex set is a plain ``int`` whose bit ``v`` is set when ``v`` belongs
to it.  Masks are hashable, cheap to combine and double as memo keys, which
is what the exponential enumerations downstream rely on.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from . import config
from .errors import InputError, ParseError, ResourceError

Edge = tuple[int, int]


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def members(mask: int) -> list[int]:
    """Ascending list of the vertices in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def vertex_set(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if v < 0:
            raise InputError(f"negative vertex {v}")
        mask |= 1 << v
    return mask


def full_mask(n: int) -> int:
    return (1 << n) - 1


class Graph:
    """Simple undirected graph stored as a tuple of neighbourhood masks."""

    __slots__ = ("n", "adj", "_edges")

    def __init__(self, n: int, adj: Sequence[int], *, _trusted: bool = False):
        if not _trusted:
            if n < 0:
                raise InputError("vertex count must be nonnegative")
            if len(adj) != n:
                raise InputError("need one neighbourhood mask per vertex")
            full = full_mask(n)
            for v, nb in enumerate(adj):
                if nb & ~full:
                    raise InputError(f"vertex {v} has a neighbour outside 0..{n - 1}")
                if nb >> v & 1:
                    raise InputError(f"loop at vertex {v}")
                for u in members(nb):
                    if not adj[u] >> v & 1:
                        raise InputError(f"adjacency not symmetric at {{{u}, {v}}}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_edges", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        if n < 0:
            raise InputError("vertex count must be nonnegative")
        adj = [0] * n
        seen = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {{{u}, {v}}} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InputError(f"loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InputError(f"duplicate edge {{{key[0]}, {key[1]}}}")
            seen.add(key)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, _trusted=True)

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        if self._edges is None:
            out = []
            for u in range(self.n):
                for v in members(self.adj[u] >> (u + 1)):
                    out.append((u, u + 1 + v))
            object.__setattr__(self, "_edges", tuple(out))
        return self._edges

    @property
    def m(self) -> int:
        return sum(popcount(nb) for nb in self.adj) // 2

    @property
    def vertices(self) -> int:
        return full_mask(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def isolated_vertices(self) -> int:
        return vertex_set(v for v in range(self.n) if not self.adj[v])

    def check_vertex(self, x: int) -> None:
        if not isinstance(x, int) or not 0 <= x < self.n:
            raise InputError(f"vertex {x!r} is not in 0..{self.n - 1}")

    def check_set(self, w: int) -> None:
        if w < 0 or w >> self.n:
            raise InputError(f"vertex set {w:#b} is not contained in 0..{self.n - 1}")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


# ---------------------------------------------------------------------------
# neighbourhoods and induced subgraphs
# ---------------------------------------------------------------------------

def neighbors(g: Graph, x: int) -> int:
    g.check_vertex(x)
    return g.adj[x]


def closed_neighborhood(g: Graph, x: int) -> int:
    g.check_vertex(x)
    return g.adj[x] | 1 << x


def neighborhood_of_set(g: Graph, s: int) -> int:
    """Union of the open neighbourhoods of the vertices in ``s``."""
    out = 0
    for v in members(s):
        out |= g.adj[v]
    return out


def induced_subgraph(g: Graph, w: int) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``w``, relabelled to ``0..|w|-1``.

    Returns the graph and ``labels`` with ``labels[i]`` the original id of
    new vertex ``i``; labels ascend.
    """
    g.check_set(w)
    labels = tuple(members(w))
    index = {v: i for i, v in enumerate(labels)}
    adj = []
    for v in labels:
        nb = 0
        for u in members(g.adj[v] & w):
            nb |= 1 << index[u]
        adj.append(nb)
    return Graph(len(labels), adj, _trusted=True), labels


def lift(mask: int, labels: Sequence[int]) -> int:
    """Map a vertex set of an induced subgraph back to host ids."""
    out = 0
    for i in members(mask):
        out |= 1 << labels[i]
    return out


def delete_vertex(g: Graph, x: int) -> Graph:
    g.check_vertex(x)
    return induced_subgraph(g, g.vertices & ~(1 << x))[0]


def delete_closed_neighborhood(g: Graph, x: int) -> Graph:
    return induced_subgraph(g, g.vertices & ~closed_neighborhood(g, x))[0]


def has_edge_within(g: Graph, s: int) -> bool:
    for v in members(s):
        if g.adj[v] & s:
            return True
    return False


def is_independent(g: Graph, s: int) -> bool:
    return not has_edge_within(g, s)


# ---------------------------------------------------------------------------
# maximal independent sets / minimal vertex covers
# ---------------------------------------------------------------------------

def _check_enumeration(n: int) -> None:
    cutoff = config.CUTOFFS.enumeration
    if n > cutoff:
        raise ResourceError(f"{n} vertices exceeds the enumeration cutoff {cutoff}")


def maximal_independent_sets_within(adj: Sequence[int], s: int) -> list[int]:
    """Maximal independent sets of the subgraph induced on ``s``.

    Host ids are kept.  This is Bron--Kerbosch with Tomita pivoting run on
    the complement graph, whose maximal cliques are exactly the maximal
    independent sets.  Output is sorted by mask value.
    """
    non_adj = {v: s & ~adj[v] & ~(1 << v) for v in members(s)}
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p:
            if not x:
                found.append(r)
            return
        best = -1
        pivot_reach = 0
        for u in members(p | x):
            reach = p & non_adj[u]
            c = popcount(reach)
            if c > best:
                best, pivot_reach = c, reach
        for v in members(p & ~pivot_reach):
            bit = 1 << v
            expand(r | bit, p & non_adj[v], x & non_adj[v])
            p &= ~bit
            x |= bit

    expand(0, s, 0)
    found.sort()
    return found


def maximal_independent_sets(g: Graph) -> list[int]:
    _check_enumeration(g.n)
    return maximal_independent_sets_within(g.adj, g.vertices)


def minimal_vertex_covers(g: Graph) -> list[int]:
    """Complements of the maximal independent sets, in the same order."""
    full = g.vertices
    return [full ^ f for f in maximal_independent_sets(g)]


def independent_sets_within(adj: Sequence[int], s: int) -> Iterator[int]:
    """Every independent subset of ``s`` (including the empty set)."""
    verts = members(s)

    def walk(i: int, chosen: int, blocked: int):
        if i == len(verts):
            yield chosen
            return
        yield from walk(i + 1, chosen, blocked)
        v = verts[i]
        if not blocked >> v & 1:
            yield from walk(i + 1, chosen | 1 << v, blocked | adj[v])

    return walk(0, 0, 0)


def connected_components(g: Graph) -> list[int]:
    """Components as masks, ordered by smallest vertex."""
    remaining = g.vertices
    out = []
    while remaining:
        seed = remaining & -remaining
        comp = frontier = seed
        while frontier:
            reach = 0
            for v in members(frontier):
                reach |= g.adj[v]
            frontier = reach & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def complement(g: Graph) -> Graph:
    full = g.vertices
    return Graph(g.n, [full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)], _trusted=True)


# ---------------------------------------------------------------------------
# named graphs and labelled enumeration
# ---------------------------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n, _trusted=True)


def whisker(g: Graph) -> Graph:
    """Attach one pendant vertex ``v + n`` to every vertex ``v``."""
    n = g.n
    return Graph.from_edges(2 * n, list(g.edges) + [(v, v + n) for v in range(n)])


def graph_from_code(n: int, code: int) -> Graph:
    """Labelled graph whose edge set is encoded by ``code``.

    Bit ``k`` of ``code`` selects the ``k``-th pair of
    ``itertools.combinations(range(n), 2)``.
    """
    adj = [0] * n
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            if code >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    return Graph(n, adj, _trusted=True)


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2**(n choose 2)`` labelled graphs on ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        adj = [0] * n
        k = code
        i = 0
        while k:
            if k & 1:
                u, v = pairs[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k >>= 1
            i += 1
        yield Graph(n, adj, _trusted=True)


# ---------------------------------------------------------------------------
# edge-list text format
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format.

    The first non-comment line holds ``n``; every later one holds ``u v``.
    Lines starting with ``#`` and blank lines are skipped.
    """
    n = None
    adj: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise ParseError(f"expected integers, got {line!r}", lineno) from None
        if n is None:
            if len(values) != 1 or values[0] < 0:
                raise ParseError(f"expected a nonnegative vertex count, got {line!r}", lineno)
            n = values[0]
            adj = [0] * n
            continue
        if len(values) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = values
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1} in {line!r}", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        if adj[u] >> v & 1:
            raise ParseError(f"duplicate edge {{{min(u, v)}, {max(u, v)}}}", lineno)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if n is None:
        raise ParseError("missing vertex count")
    return Graph(n, adj, _trusted=True)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
