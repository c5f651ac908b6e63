"""Squarefree monomial ideals kept as antichains of generator supports.

A squarefree monomial is identified with its support mask.  Every ideal is
stored minimalized (no generator divides another), so two ideals are equal
exactly when their generator tuples are equal.
"""
from __future__ import annotations

from typing import Iterable

from .errors import InputError
from .graph import Graph, members, popcount


def minimalize(supports: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-minimal members of ``supports``, sorted by mask value."""
    kept: list[int] = []
    for s in sorted(set(supports), key=lambda m: (popcount(m), m)):
        if not any(k & s == k for k in kept):
            kept.append(s)
    return tuple(sorted(kept))


class SquarefreeMonomialIdeal:
    __slots__ = ("n", "generators", "is_unit")

    def __init__(self, n: int, supports: Iterable[int] = ()):
        supports = list(supports)
        full = (1 << n) - 1
        for s in supports:
            if s < 0 or s & ~full:
                raise InputError(f"generator support {s:#b} uses a variable outside 0..{n - 1}")
        unit = 0 in supports
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "is_unit", unit)
        object.__setattr__(self, "generators", () if unit else minimalize(supports))

    def __setattr__(self, name, value):
        raise AttributeError("SquarefreeMonomialIdeal is immutable")

    @classmethod
    def unit(cls, n: int) -> "SquarefreeMonomialIdeal":
        return cls(n, [0])

    @classmethod
    def zero(cls, n: int) -> "SquarefreeMonomialIdeal":
        return cls(n, [])

    @property
    def is_zero(self) -> bool:
        return not self.is_unit and not self.generators

    def __eq__(self, other):
        return (
            isinstance(other, SquarefreeMonomialIdeal)
            and self.n == other.n
            and self.is_unit == other.is_unit
            and self.generators == other.generators
        )

    def __hash__(self):
        return hash((self.n, self.is_unit, self.generators))

    def __repr__(self):
        if self.is_unit:
            return f"SquarefreeMonomialIdeal(n={self.n}, unit)"
        return f"SquarefreeMonomialIdeal(n={self.n}, {self.as_lists()})"

    def as_lists(self) -> list[list[int]]:
        """Canonical form: sorted list of sorted variable-index lists."""
        if self.is_unit:
            return [[]]
        return sorted(members(g) for g in self.generators)

    def contains(self, monomial: int) -> bool:
        """Membership of a squarefree monomial given by its support."""
        if self.is_unit:
            return True
        return any(g & monomial == g for g in self.generators)

    def _check_ring(self, other: "SquarefreeMonomialIdeal") -> None:
        if self.n != other.n:
            raise InputError(f"ideals live in different rings ({self.n} vs {other.n} variables)")

    def __add__(self, other: "SquarefreeMonomialIdeal") -> "SquarefreeMonomialIdeal":
        self._check_ring(other)
        if self.is_unit or other.is_unit:
            return SquarefreeMonomialIdeal.unit(self.n)
        return SquarefreeMonomialIdeal(self.n, self.generators + other.generators)

    def __and__(self, other: "SquarefreeMonomialIdeal") -> "SquarefreeMonomialIdeal":
        """Intersection: pairwise least common multiples, minimalized."""
        self._check_ring(other)
        if self.is_unit:
            return other
        if other.is_unit:
            return self
        return SquarefreeMonomialIdeal(self.n, [a | b for a in self.generators for b in other.generators])

    def times(self, monomial: int) -> "SquarefreeMonomialIdeal":
        """Product with a squarefree monomial, as union of supports."""
        if self.is_unit:
            return SquarefreeMonomialIdeal(self.n, [monomial])
        return SquarefreeMonomialIdeal(self.n, [g | monomial for g in self.generators])

    def support(self) -> int:
        out = 0
        for g in self.generators:
            out |= g
        return out

    def alexander_dual(self) -> "SquarefreeMonomialIdeal":
        """Intersection of the primes generated by each generator's variables.

        The dual of the zero ideal is the unit ideal and vice versa.
        """
        if self.is_zero:
            return SquarefreeMonomialIdeal.unit(self.n)
        if self.is_unit:
            return SquarefreeMonomialIdeal.zero(self.n)
        result = SquarefreeMonomialIdeal.unit(self.n)
        for g in self.generators:
            result = result & prime_ideal(self.n, g)
        return result


def prime_ideal(n: int, support: int) -> SquarefreeMonomialIdeal:
    """The monomial prime generated by the variables in ``support``."""
    return SquarefreeMonomialIdeal(n, [1 << v for v in members(support)])


def ideal_of_graph(g: Graph) -> SquarefreeMonomialIdeal:
    """Edge ideal; the edgeless graph gives the zero ideal."""
    return SquarefreeMonomialIdeal(g.n, [(1 << u) | (1 << v) for u, v in g.edges])
