"""Alexander duality for edge ideals and the identities built on it.

The cover ideal ``I(G)^v`` is generated by the monomials of the minimal
vertex covers.  Splitting at a vertex ``x`` with neighbours ``y_1..y_t``
gives

    I(G)^v           = x I(G')^v + y_1...y_t I(G'')^v
    x y_1...y_t I(G'')^v = x I(G')^v  ∩  y_1...y_t I(G'')^v

with ``G' = G - x`` and ``G'' = G - N[x]``.  The checks here evaluate these
identities on explicit generator antichains; the homological ones call
the Hochster oracle.
"""
from __future__ import annotations

import dataclasses

from .complexes import hochster_betti_table
from .errors import DomainError
from .graph import Graph, induced_subgraph, lift, members, minimal_vertex_covers
from .ideals import SquarefreeMonomialIdeal, ideal_of_graph, prime_ideal
from .linalg import check_field_char


@dataclasses.dataclass(frozen=True)
class CoverIdeal:
    """``I(G)^v`` together with the minimal vertex cover behind each generator."""

    ideal: SquarefreeMonomialIdeal
    covers: tuple

    def to_json(self) -> list:
        return self.ideal.as_lists()


def alexander_dual_of_edge_ideal(g: Graph) -> CoverIdeal:
    covers = tuple(minimal_vertex_covers(g))
    return CoverIdeal(SquarefreeMonomialIdeal(g.n, covers), covers)


def cover_ideal_within(g: Graph, w: int) -> SquarefreeMonomialIdeal:
    """Cover ideal of the induced subgraph on ``w``, written in host variables."""
    sub, labels = induced_subgraph(g, w)
    return SquarefreeMonomialIdeal(g.n, [lift(c, labels) for c in minimal_vertex_covers(sub)])


def _split(g: Graph, x: int):
    g.check_vertex(x)
    nbrs = g.adj[x]
    if not nbrs:
        raise DomainError(f"vertex {x} is isolated; the splitting needs t >= 1 neighbours")
    deletion = g.vertices & ~(1 << x)
    link = g.vertices & ~nbrs & ~(1 << x)
    return nbrs, cover_ideal_within(g, deletion), cover_ideal_within(g, link)


def _guarded_times(ideal: SquarefreeMonomialIdeal, monomial: int) -> SquarefreeMonomialIdeal:
    if ideal.support() & monomial:
        raise AssertionError("multiplier shares variables with the ideal's generators")
    return ideal.times(monomial)


def decomposition_parts(g: Graph, x: int) -> dict:
    """Both sides of the two splitting identities at ``x``."""
    nbrs, dual_del, dual_link = _split(g, x)
    xbit = 1 << x
    x_part = _guarded_times(dual_del, xbit)
    y_part = _guarded_times(dual_link, nbrs)
    return {
        "cover_ideal": alexander_dual_of_edge_ideal(g).ideal,
        "sum": x_part + y_part,
        "product": _guarded_times(dual_link, nbrs | xbit),
        "intersection": x_part & y_part,
    }


def _same_ideal(a: SquarefreeMonomialIdeal, b: SquarefreeMonomialIdeal) -> bool:
    """Equality by two-sided generator membership."""
    if a.is_unit or b.is_unit:
        return a.is_unit == b.is_unit
    return all(b.contains(m) for m in a.generators) and all(a.contains(m) for m in b.generators)


def decomposition_identity_check(g: Graph, x: int) -> bool:
    parts = decomposition_parts(g, x)
    return _same_ideal(parts["cover_ideal"], parts["sum"]) and _same_ideal(
        parts["product"], parts["intersection"]
    )


def primary_decomposition_check(g: Graph) -> bool:
    """Does the intersection of the cover primes give back ``I(G)``?"""
    result = SquarefreeMonomialIdeal.unit(g.n)
    for c in minimal_vertex_covers(g):
        result = result & prime_ideal(g.n, c)
    return result == ideal_of_graph(g)


def double_dual_check(g: Graph) -> bool:
    edge_ideal = ideal_of_graph(g)
    return edge_ideal.alexander_dual().alexander_dual() == edge_ideal


# ---------------------------------------------------------------------------
# homological invariants of cover ideals (as modules, not quotients)
# ---------------------------------------------------------------------------

def ideal_pd(ideal: SquarefreeMonomialIdeal, field_char: int = 0) -> int:
    """``pd`` of the ideal itself; the unit ideal ``R`` is free, so 0."""
    if ideal.is_unit:
        return 0
    if ideal.is_zero:
        raise DomainError("the zero ideal has no projective dimension")
    return hochster_betti_table(ideal, field_char).pd - 1


def ideal_reg(ideal: SquarefreeMonomialIdeal, field_char: int = 0) -> int:
    """``reg`` of the ideal itself; ``reg(R) = 0``."""
    if ideal.is_unit:
        return 0
    if ideal.is_zero:
        raise DomainError("the zero ideal has no regularity")
    return hochster_betti_table(ideal, field_char).reg + 1


def cover_ideal_pd(g: Graph, field_char: int = 0) -> int:
    return ideal_pd(alexander_dual_of_edge_ideal(g).ideal, field_char)


def cover_ideal_reg(g: Graph, field_char: int = 0) -> int:
    return ideal_reg(alexander_dual_of_edge_ideal(g).ideal, field_char)


def terai_sides(g: Graph, field_char: int = 0) -> tuple[int, int]:
    """``(pd(I(G)^v), reg(R/I(G)))``; both 0 for edgeless graphs."""
    field_char = check_field_char(field_char)
    if not g.m:
        return 0, 0
    return cover_ideal_pd(g, field_char), hochster_betti_table(ideal_of_graph(g), field_char).reg


def terai_check(g: Graph, field_char: int = 0) -> bool:
    lhs, rhs = terai_sides(g, field_char)
    return lhs == rhs


def pd_equals_dual_reg_check(g: Graph, field_char: int = 0) -> bool:
    """``pd(R/I(G)) == reg(I(G)^v)``."""
    pd = hochster_betti_table(ideal_of_graph(g), field_char).pd
    return pd == cover_ideal_reg(g, field_char)


def splitting_bounds(g: Graph, x: int, field_char: int = 0) -> dict:
    """Both sides of the pd and reg bounds coming from the splitting at ``x``.

    ``pd(I^v) <= max(pd(I(G')^v), pd(I(G'')^v) + 1)`` and
    ``reg(I^v) <= max(reg(I(G')^v) + 1, reg(I(G'')^v) + t)``.
    """
    nbrs, dual_del, dual_link = _split(g, x)
    whole = alexander_dual_of_edge_ideal(g).ideal
    t = len(members(nbrs))
    pd_lhs = ideal_pd(whole, field_char)
    pd_rhs = max(ideal_pd(dual_del, field_char), ideal_pd(dual_link, field_char) + 1)
    reg_lhs = ideal_reg(whole, field_char)
    reg_rhs = max(ideal_reg(dual_del, field_char) + 1, ideal_reg(dual_link, field_char) + t)
    return {"pd": (pd_lhs, pd_rhs), "reg": (reg_lhs, reg_rhs)}


def splitting_bounds_check(g: Graph, x: int, field_char: int = 0) -> bool:
    b = splitting_bounds(g, x, field_char)
    return b["pd"][0] <= b["pd"][1] and b["reg"][0] <= b["reg"][1]

