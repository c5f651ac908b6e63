"""Slow, independent reference implementations used only by the tests.

Nothing here calls the package's engines: everything is plain subset
scanning over Python sets, so agreement is meaningful.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations


def edge_set(g):
    return {frozenset(e) for e in g.edges}


def subsets(vertices, sizes=None):
    vertices = list(vertices)
    sizes = range(len(vertices) + 1) if sizes is None else sizes
    for k in sizes:
        for combo in combinations(vertices, k):
            yield frozenset(combo)


def independent(edges, s) -> bool:
    return not any(frozenset(p) in edges for p in combinations(s, 2))


def maximal_independent_sets(g) -> set:
    edges = edge_set(g)
    everything = range(g.n)
    out = set()
    for s in subsets(everything):
        if independent(edges, s) and all(not independent(edges, s | {v}) for v in everything if v not in s):
            out.add(s)
    return out


def minimal_vertex_covers(g) -> set:
    edges = edge_set(g)

    def covers(c):
        return all(e & c for e in edges)

    return {
        c for c in subsets(range(g.n))
        if covers(c) and all(not covers(c - {v}) for v in c)
    }


def induced_matching_number(g) -> int:
    edges = [tuple(e) for e in g.edges]
    es = edge_set(g)
    best = 0
    for k in range(1, len(edges) + 1):
        found = False
        for combo in combinations(edges, k):
            verts = set().union(*combo)
            if len(verts) != 2 * k:
                continue
            inside = {e for e in es if e <= verts}
            if inside == {frozenset(e) for e in combo}:
                found = True
                break
        if not found:
            break
        best = k
    return best


def domination_number(g) -> int:
    nbhd = [{v} | {u for u in range(g.n) if g.has_edge(u, v)} for v in range(g.n)]
    for k in range(g.n + 1):
        for a in combinations(range(g.n), k):
            if set().union(*(nbhd[v] for v in a)) >= set(range(g.n)):
                return k
    return g.n


def edgewise_domination_number(g, closed=False) -> int:
    edges = list(g.edges)
    for k in range(1, len(edges) + 1):
        for f in combinations(edges, k):
            ends = set().union(*f)
            ok = True
            for v in range(g.n):
                if closed and v in ends:
                    continue
                if not any(g.has_edge(v, u) for u in ends):
                    ok = False
                    break
            if ok:
                return k
    raise ValueError("no edgewise dominant set")


def has_induced_cycle_at_least_4(g) -> bool:
    """Chordality oracle: some vertex set of size >= 4 induces a cycle."""
    edges = edge_set(g)
    for s in subsets(range(g.n), range(4, g.n + 1)):
        deg = {v: sum(frozenset((v, u)) in edges for u in s if u != v) for v in s}
        if any(d != 2 for d in deg.values()):
            continue
        # 2-regular; connected means a single cycle
        start = next(iter(s))
        seen, stack = {start}, [start]
        while stack:
            v = stack.pop()
            for u in s:
                if u not in seen and frozenset((u, v)) in edges:
                    seen.add(u)
                    stack.append(u)
        if seen == s:
            return True
    return False


def has_induced_c5(g) -> bool:
    edges = edge_set(g)
    for s in subsets(range(g.n), [5]):
        if all(sum(frozenset((v, u)) in edges for u in s if u != v) == 2 for v in s):
            inside = [e for e in edges if e <= s]
            if len(inside) == 5:
                # 2-regular on 5 vertices is always one 5-cycle
                return True
    return False


def has_c5_subgraph(g) -> bool:
    for s in combinations(range(g.n), 5):
        for perm in permutations(s[1:]):
            cycle = (s[0],) + perm
            if all(g.has_edge(cycle[i], cycle[(i + 1) % 5]) for i in range(5)):
                return True
    return False


def is_vertex_decomposable(g, vertices=None) -> bool:
    """Literal recursion on vertex sets, no memo, shedding by subset scan."""
    edges = edge_set(g)
    vs = frozenset(range(g.n)) if vertices is None else vertices
    if not any(e <= vs for e in edges):
        return True
    for x in sorted(vs):
        nx = {u for u in vs if frozenset((u, x)) in edges}
        if not nx:
            continue
        deletion = vs - {x}
        link = vs - nx - {x}
        shedding = True
        for s in subsets(link):
            if not independent(edges, s):
                continue
            if all(not independent(edges, s | {v}) for v in deletion - s):
                shedding = False
                break
        if shedding and is_vertex_decomposable(g, deletion) and is_vertex_decomposable(g, link):
            return True
    return False


def rank_fraction(rows, p=0) -> int:
    """Gaussian elimination over Q (``p == 0``) or GF(p) with Fractions."""
    m = [[Fraction(x) for x in row] for row in rows]
    if p:
        m = [[Fraction(int(x) % p) for x in row] for row in m]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                if p:
                    inv = pow(int(m[rank][c]), -1, p)
                    factor = int(m[r][c]) * inv % p
                    m[r] = [Fraction((int(a) - factor * int(b)) % p) for a, b in zip(m[r], m[rank])]
                else:
                    factor = m[r][c] / m[rank][c]
                    m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def hilbert_numerator(g) -> dict:
    """K-polynomial of R/I(G): sum over independent sets F of t^|F| (1-t)^(n-|F|)."""
    edges = edge_set(g)
    poly: dict[int, int] = {}
    for s in subsets(range(g.n)):
        if not independent(edges, s):
            continue
        k = len(s)
        rest = g.n - k
        for a in range(rest + 1):
            coeff = _binom(rest, a) * (-1) ** a
            poly[k + a] = poly.get(k + a, 0) + coeff
    return {j: c for j, c in poly.items() if c}


def _binom(n, k):
    from math import comb

    return comb(n, k)


def betti_alternating_sums(table) -> dict:
    poly: dict[int, int] = {}
    for i, j, b in table.rows():
        poly[j] = poly.get(j, 0) + (-1) ** i * b
    return {j: c for j, c in poly.items() if c}


def semi_strongly_disjoint_brute(g) -> int:
    """d' from the definition: try every partial map flower -> root."""
    best = 0
    n = g.n
    for roots in subsets(range(n), range(1, n + 1)):
        if not independent(edge_set(g), roots):
            continue
        others = [v for v in range(n) if v not in roots]
        best = max(best, _max_assignment(g, roots, others, {}, 0))
    return best


def _max_assignment(g, roots, others, owned, i):
    if i == len(others):
        return sum(owned.values()) if set(owned) == set(roots) and all(owned.values()) else 0
    v = others[i]
    best = _max_assignment(g, roots, others, owned, i + 1)
    for r in roots:
        if g.has_edge(v, r):
            owned[r] = owned.get(r, 0) + 1
            best = max(best, _max_assignment(g, roots, others, owned, i + 1))
            owned[r] -= 1
            if not owned[r]:
                del owned[r]
    return best
