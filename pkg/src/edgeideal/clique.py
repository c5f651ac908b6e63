"""Maximum clique by branch and bound with a greedy colouring bound.

Tomita--Seki style MCQ on bitmask adjacency: candidates are greedily
coloured, and a branch is cut once ``|clique| + colour`` cannot beat the
incumbent.
"""
from __future__ import annotations

from typing import Sequence


def _colour_order(p: int, adj: Sequence[int]) -> list[tuple[int, int]]:
    """Greedy colouring of the candidate set ``p``.

    Returns ``(vertex, colour)`` pairs in non-decreasing colour order.
    """
    out = []
    colour = 0
    uncoloured = p
    while uncoloured:
        colour += 1
        q = uncoloured
        while q:
            low = q & -q
            v = low.bit_length() - 1
            out.append((v, colour))
            uncoloured &= ~low
            q &= ~low & ~adj[v]
    return out


def maximum_clique(adj: Sequence[int]) -> int:
    """Vertex mask of a maximum clique of the graph with adjacency ``adj``.

    Deterministic: among maximum cliques the first one reached by the
    search (vertex order, colour order) is returned.
    """
    n = len(adj)
    if n == 0:
        return 0
    best = [0, 0]  # size, mask

    def expand(clique: int, size: int, p: int) -> None:
        for v, colour in reversed(_colour_order(p, adj)):
            if size + colour <= best[0]:
                return
            bit = 1 << v
            grown = clique | bit
            sub = p & adj[v]
            if sub:
                expand(grown, size + 1, sub)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, grown
            p &= ~bit

    expand(0, 0, (1 << n) - 1)
    return best[1]
