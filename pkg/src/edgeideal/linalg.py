"""Exact matrix rank over Q (fraction-free) and over GF(p)."""
from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import InputError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_field_char(field_char: int) -> int:
    """Validate a field characteristic: 0 or a prime below 2**31."""
    if field_char == 0:
        return 0
    if not isinstance(field_char, int) or field_char >= 1 << 31 or not _is_prime(field_char):
        raise InputError(f"field characteristic must be 0 or a prime < 2**31, got {field_char!r}")
    return field_char


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix by Bareiss elimination.

    Every intermediate entry is a minor of the input, so the division by
    the previous pivot is exact and no fractions appear.
    """
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(m)):
            if m[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        prow = m[rank]
        p = prow[col]
        for i in range(rank + 1, len(m)):
            row = m[i]
            a = row[col]
            if a:
                m[i] = [(p * row[j] - a * prow[j]) // prev for j in range(ncols)]
            elif p != prev:
                m[i] = [(p * x) // prev for x in row]
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over GF(p) by Gaussian elimination on residues."""
    m = [[x % p for x in r] for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(m)):
            if m[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        prow = m[rank]
        inv = pow(prow[col], p - 2, p)
        prow = m[rank] = [(x * inv) % p for x in prow]
        for i in range(rank + 1, len(m)):
            a = m[i][col]
            if a:
                row = m[i]
                m[i] = [(row[j] - a * prow[j]) % p for j in range(ncols)]
        rank += 1
        if rank == len(m):
            break
    return rank


def sparse_rank(rows: Iterable[Mapping[int, int]], field_char: int = 0) -> int:
    """Rank of a matrix given as sparse rows ``{column: entry}``.

    Each row is reduced against the pivot rows found so far, keyed by
    leading column.  Over Q rows stay integral and are divided by their
    content after every step; with the unit pivots typical of boundary
    maps nothing grows.
    """
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        if field_char:
            row = {c: v % field_char for c, v in raw.items() if v % field_char}
        else:
            row = {c: v for c, v in raw.items() if v}
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                if field_char:
                    inv = pow(row[lead], field_char - 2, field_char)
                    row = {c: v * inv % field_char for c, v in row.items()}
                pivots[lead] = row
                break
            a = row[lead]
            if field_char:
                for c, v in prow.items():
                    x = (row.get(c, 0) - a * v) % field_char
                    if x:
                        row[c] = x
                    else:
                        row.pop(c, None)
            else:
                p = prow[lead]
                row = {c: p * v for c, v in row.items()}
                for c, v in prow.items():
                    x = row.get(c, 0) - a * v
                    if x:
                        row[c] = x
                    else:
                        row.pop(c, None)
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    row = {c: v // g for c, v in row.items()}
    return len(pivots)


def matrix_rank(rows: Sequence[Sequence[int]], field_char: int = 0) -> int:
    if field_char == 0:
        return bareiss_rank(rows)
    return rank_mod_p(rows, field_char)
