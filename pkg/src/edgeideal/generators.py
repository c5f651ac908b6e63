"""Seeded graph generators for the theorem harness.

Every generator takes a :class:`random.Random`-compatible seed and is fully
determined by ``(family, n, seed)``.
"""
from __future__ import annotations

import dataclasses
import random
from typing import Iterator, Optional

from .decomposability import is_chordal, is_vertex_decomposable
from .errors import InputError, ResourceError
from .graph import (
    Graph,
    all_labeled_graphs,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    star_graph,
    whisker,
)

FAMILIES = ("path", "cycle", "star", "complete", "tree", "forest", "chordal", "bipartite_vd", "whisker")
BASE_FAMILIES = tuple(f for f in FAMILIES if f != "whisker")

#: attempts allowed when rejection-sampling ``bipartite_vd``
REJECTION_BUDGET = 2000


@dataclasses.dataclass(frozen=True)
class GeneratorSpec:
    """``family`` with ``n`` vertices.  For ``whisker`` the base family
    ``base`` is built on ``n`` vertices and the result has ``2n``."""

    family: str
    n: int
    seed: int = 0
    base: Optional[str] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.family == "whisker":
            if self.base is None or self.base not in BASE_FAMILIES:
                raise InputError(f"whisker needs a base family from {', '.join(BASE_FAMILIES)}")
        if self.n < 0:
            raise InputError("n must be nonnegative")

    @property
    def label(self) -> str:
        if self.family == "whisker":
            return f"whisker-of-{self.base}-{self.n}-s{self.seed}"
        return f"{self.family}-{self.n}-s{self.seed}"


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree decoded from a random Prüfer sequence."""
    if n <= 1:
        return empty_graph(n)
    if n == 2:
        return path_graph(2)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def random_forest(n: int, rng: random.Random, keep: float = 0.7) -> Graph:
    tree = random_tree(n, rng)
    return Graph.from_edges(n, [e for e in tree.edges if rng.random() < keep])


def random_chordal(n: int, rng: random.Random) -> Graph:
    """Intersection graph of random subtrees of a random host tree."""
    if n == 0:
        return empty_graph(0)
    hosts = max(2, n)
    host = random_tree(hosts, rng)
    subtrees = []
    for _ in range(n):
        start = rng.randrange(hosts)
        size = rng.randint(1, max(1, hosts // 2))
        grown = {start}
        frontier = [u for u in range(hosts) if host.adj[start] >> u & 1]
        while len(grown) < size and frontier:
            nxt = frontier.pop(rng.randrange(len(frontier)))
            if nxt in grown:
                continue
            grown.add(nxt)
            frontier.extend(u for u in range(hosts) if host.adj[nxt] >> u & 1 and u not in grown)
        subtrees.append(grown)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if subtrees[i] & subtrees[j]]
    g = Graph.from_edges(n, edges)
    if not is_chordal(g):
        raise AssertionError("subtree intersection graph failed the chordality check")
    return g


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdős–Rényi G(n, p)."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_bipartite_vd(n: int, rng: random.Random, budget: int = REJECTION_BUDGET) -> Graph:
    """Rejection sampling: random bipartite graphs until one is vertex decomposable."""
    for _ in range(budget):
        left = rng.randint(0, n)
        p = rng.uniform(0.2, 0.8)
        edges = [(u, v) for u in range(left) for v in range(left, n) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if is_vertex_decomposable(g)[0]:
            return g
    raise ResourceError(f"no vertex decomposable bipartite graph on {n} vertices in {budget} draws")


def _base(family: str, n: int, rng: random.Random) -> Graph:
    if family == "path":
        return path_graph(n)
    if family == "cycle":
        return cycle_graph(n)
    if family == "star":
        if n == 0:
            return empty_graph(0)
        return star_graph(n - 1)
    if family == "complete":
        return complete_graph(n)
    if family == "tree":
        return random_tree(n, rng)
    if family == "forest":
        return random_forest(n, rng)
    if family == "chordal":
        return random_chordal(n, rng)
    if family == "bipartite_vd":
        return random_bipartite_vd(n, rng)
    raise InputError(f"unknown family {family!r}")


def generate(spec: GeneratorSpec) -> Graph:
    rng = random.Random(spec.seed)
    if spec.family == "whisker":
        return whisker(_base(spec.base, spec.n, rng))
    return _base(spec.family, spec.n, rng)


def labeled_corpus(max_n: int) -> Iterator[tuple[str, Graph]]:
    """Every labelled graph on ``0..max_n`` vertices, with stable ids."""
    for n in range(max_n + 1):
        for code, g in enumerate(all_labeled_graphs(n)):
            yield f"L{n}-{code}", g


def sampled_corpus(sizes, per_size: int, seed: int) -> Iterator[tuple[str, Graph]]:
    """Seeded mix of random, tree, chordal and whiskered graphs."""
    rng = random.Random(seed)
    for n in sizes:
        for k in range(per_size):
            kind = k % 4
            if kind == 0:
                g = random_graph(n, rng.uniform(0.15, 0.7), rng)
            elif kind == 1:
                g = random_tree(n, rng)
            elif kind == 2:
                g = random_chordal(n, rng)
            else:
                half = n // 2
                g = whisker(random_graph(half, rng.uniform(0.2, 0.8), rng))
            yield f"S{n}-{k}", g


def builtin_corpus(seed: int = 0, per_size: int = 40) -> Iterator[tuple[str, Graph]]:
    """Labelled graphs on at most 5 vertices plus seeded samples on 6 and 7."""
    yield from labeled_corpus(5)
    yield from sampled_corpus((6, 7), per_size, seed)
