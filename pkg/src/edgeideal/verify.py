"""Theorem verification reports and the d = d' counterexample search."""
from __future__ import annotations

import dataclasses
import json
import random
from typing import Any, Callable, Optional

from . import __version__, config
from .complexes import hochster_betti_table
from .decomposability import (
    C5_READINGS,
    c5_witness,
    find_c5_subgraph,
    find_induced_c5,
    is_bipartite,
    is_chordal,
    is_forest,
    is_vertex_decomposable,
)
from .dual import (
    decomposition_identity_check,
    cover_ideal_pd,
    double_dual_check,
    primary_decomposition_check,
)
from .errors import InputError, ResourceError
from .generators import random_graph
from .graph import Graph, all_labeled_graphs, members, popcount
from .ideals import ideal_of_graph
from .invariants import (
    bight,
    d_brute,
    d_family,
    d_prime_brute,
    d_prime_family,
    is_dominating,
    is_edgewise_dominant,
    is_minimal_vertex_cover,
    max_three_disjoint_edges,
    min_max_maximal_independent,
    minimum_dominating_set,
    minimum_edgewise_dominating_set,
)

SKIPPED = "skipped: resource"


@dataclasses.dataclass
class Verdict:
    claim: str
    applicable: bool
    lhs: Any
    rhs: Any
    relation: str
    passed: Optional[bool]
    note: str = ""

    def to_json(self) -> dict:
        return dataclasses.asdict(self)


@dataclasses.dataclass
class VerificationReport:
    graph: dict
    flags: dict
    invariants: dict
    oracle: dict
    verdicts: list
    meta: dict

    @property
    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if v.applicable and v.passed is False]

    @property
    def ok(self) -> bool:
        return not self.failures

    def verdict(self, claim: str) -> Verdict:
        for v in self.verdicts:
            if v.claim == claim:
                return v
        raise KeyError(claim)

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "flags": self.flags,
            "invariants": self.invariants,
            "oracle": self.oracle,
            "verdicts": [v.to_json() for v in self.verdicts],
            "meta": self.meta,
        }


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def write_report(report: VerificationReport, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(report.to_json()))


def _attempt(fn: Callable, *args):
    try:
        return fn(*args)
    except ResourceError:
        return None


_RELATIONS = {
    "==": lambda a, b: a == b,
    "<=": lambda a, b: a <= b,
    ">=": lambda a, b: a >= b,
}


def _verdict(claim, applicable, lhs, rhs, relation, note=""):
    if lhs is None or rhs is None:
        return Verdict(claim, applicable, lhs, rhs, relation, None, SKIPPED)
    return Verdict(claim, applicable, lhs, rhs, relation, _RELATIONS[relation](lhs, rhs), note)


def classify(g: Graph) -> dict:
    """Class flags, plus the C5 witness and decomposition certificate."""
    vd = _attempt(is_vertex_decomposable, g)
    c5 = find_induced_c5(g)
    c5_any = find_c5_subgraph(g)
    mm = _attempt(min_max_maximal_independent, g)
    bip = is_bipartite(g)
    return {
        "c5_free": c5 is None,
        "c5_witness": list(c5) if c5 else None,
        "c5_subgraph_free": c5_any is None,
        "c5_subgraph_witness": list(c5_any) if c5_any else None,
        "vertex_decomposable": None if vd is None else vd[0],
        "certificate": vd[1].to_json() if vd and vd[1] else None,
        "chordal": is_chordal(g),
        "bipartite": bip,
        "forest": is_forest(g),
        # proxy for sequentially Cohen-Macaulay bipartite graphs
        "bipartite_vd": bool(bip and vd and vd[0]),
        "unmixed": None if mm is None else mm[0] == mm[1],
        "has_isolated": bool(g.isolated_vertices()),
    }


def _family_value(fn, g):
    try:
        fam = fn(g)
    except ResourceError:
        return None, None
    return (fam.size if fam else 0), fam


def invariant_bundle(g: Graph) -> dict:
    """Combinatorial invariants and their witnesses; ``None`` on cutoff."""
    c_edges = _attempt(max_three_disjoint_edges, g)
    d, dfam = _family_value(d_family, g)
    dp, dpfam = _family_value(d_prime_family, g)
    mm = _attempt(min_max_maximal_independent, g)
    dom = _attempt(minimum_dominating_set, g)
    isolated = bool(g.isolated_vertices())
    eps_open = None if isolated else _attempt(minimum_edgewise_dominating_set, g, False)
    eps_closed = None if isolated else _attempt(minimum_edgewise_dominating_set, g, True)
    return {
        "c": None if c_edges is None else len(c_edges),
        "c_witness": None if c_edges is None else [list(e) for e in c_edges],
        "d": d,
        "d_witness": dfam.to_json() if dfam else None,
        "d_prime": dp,
        "d_prime_witness": dpfam.to_json() if dpfam else None,
        "bight": _attempt(bight, g),
        "gamma": None if dom is None else popcount(dom),
        "gamma_witness": None if dom is None else members(dom),
        "epsilon": None if eps_open is None else len(eps_open),
        "epsilon_witness": None if eps_open is None else [list(e) for e in eps_open],
        "epsilon_closed": None if eps_closed is None else len(eps_closed),
        "min_maximal_independent": None if mm is None else mm[0],
        "max_maximal_independent": None if mm is None else mm[1],
        "dim": None if mm is None else mm[1],
    }


def oracle_bundle(g: Graph, field_char: int) -> Optional[dict]:
    try:
        table = hochster_betti_table(ideal_of_graph(g), field_char)
    except ResourceError:
        return None
    out = table.to_json()
    out["betti"] = out.pop("entries")
    try:
        out["cover_ideal_pd"] = cover_ideal_pd(g, field_char) if g.m else 0
    except ResourceError:
        out["cover_ideal_pd"] = None
    return out


def _check_reading(c5_reading: str) -> None:
    if c5_reading not in C5_READINGS:
        raise InputError(f"unknown C5 reading {c5_reading!r}; choose from {', '.join(C5_READINGS)}")


def verify_theorems(g: Graph, field_chars=(0,), seed=None, c5_reading: str = "induced") -> VerificationReport:
    """Evaluate every claim on ``g`` with hypothesis gating.

    The equalities for regularity, projective dimension, depth and the
    Cohen--Macaulay criterion are applicable only to C5-free vertex
    decomposable graphs; ``d == d'`` only to chordal graphs; the inequality
    chain and the lower bounds to every graph.

    ``c5_reading`` selects what C5-free means for the gate: no induced
    5-cycle (``"induced"``) or no 5-cycle at all (``"subgraph"``).  Both
    flags are always reported.
    """
    _check_reading(c5_reading)
    flags = classify(g)
    inv = invariant_bundle(g)
    oracle = {str(p): oracle_bundle(g, p) for p in field_chars}
    n = g.n
    no_isolated = not flags["has_isolated"]
    c5_free = flags["c5_free"] if c5_reading == "induced" else flags["c5_subgraph_free"]
    hyp = bool(c5_free and flags["vertex_decomposable"])
    verdicts: list[Verdict] = []
    add = verdicts.append

    c, d, dp, bt = inv["c"], inv["d"], inv["d_prime"], inv["bight"]
    add(_verdict("chain.c_le_d", True, c, d, "<="))
    add(_verdict("chain.d_le_dprime", True, d, dp, "<="))
    add(_verdict("chain.dprime_le_bight", True, dp, bt, "<="))
    add(_verdict("max_eps_gamma_le_dprime", no_isolated,
                 None if inv["epsilon"] is None or inv["gamma"] is None else max(inv["epsilon"], inv["gamma"]),
                 dp, "<="))
    add(_verdict("epsilon.open_eq_closed", no_isolated, inv["epsilon"], inv["epsilon_closed"], "=="))
    add(_verdict("d_eq_dprime.chordal", flags["chordal"], d, dp, "=="))

    fam = _attempt(d_prime_family, g)
    if fam is not None and g.m:
        add(Verdict("dprime_flowers_minimal_cover", True, members(fam.flowers), None, "minimal vertex cover",
                    is_minimal_vertex_cover(g, fam.flowers)))
        add(Verdict("dprime_flowers_dominating", no_isolated, members(fam.flowers), None, "dominating",
                    is_dominating(g, fam.flowers)))
        add(Verdict("dprime_stems_edgewise_dominant", no_isolated, [list(e) for e in fam.stems], None,
                    "edgewise dominant", is_edgewise_dominant(g, fam.stems)))

    for p in field_chars:
        o = oracle[str(p)]
        tag = f"@char{p}"
        reg = o and o["reg"]
        pd = o and o["pd"]
        dep = o and o["depth"]
        add(_verdict("chain.bight_le_pd" + tag, True, bt, pd, "<="))
        eps_bound = None if inv["epsilon"] is None else n - inv["epsilon"]
        add(_verdict("chain.pd_le_n_minus_eps" + tag, no_isolated, pd, eps_bound, "<="))
        add(_verdict("lower.reg_ge_c" + tag, True, reg, c, ">="))
        add(_verdict("lower.pd_ge_d" + tag, True, pd, d, ">="))
        add(_verdict("reg_eq_c" + tag, hyp, reg, c, "=="))
        add(_verdict("pd_eq_bight" + tag, hyp, pd, bt, "=="))
        add(_verdict("bight_eq_dprime" + tag, hyp, bt, dp, "=="))
        add(_verdict("depth_eq_min_mis" + tag, hyp, dep, inv["min_maximal_independent"], "=="))
        cm = None if dep is None or inv["dim"] is None else dep == inv["dim"]
        add(_verdict("cm_iff_unmixed" + tag, hyp, cm, flags["unmixed"], "=="))
        add(_verdict("pd_eq_bight.chordal" + tag, flags["chordal"], pd, bt, "=="))
        add(_verdict("terai" + tag, True, o and o["cover_ideal_pd"], reg, "=="))
        if hyp and not flags["c5_subgraph_free"]:
            for claim in ("reg_eq_c", "pd_eq_bight", "bight_eq_dprime", "depth_eq_min_mis", "cm_iff_unmixed"):
                v = next(x for x in verdicts if x.claim == claim + tag)
                if v.passed is False:
                    v.note = "graph has a 5-cycle with chords: " + "-".join(map(str, flags["c5_subgraph_witness"]))
        if not hyp:
            for claim in ("reg_eq_c", "pd_eq_bight", "bight_eq_dprime", "depth_eq_min_mis"):
                v = next(x for x in verdicts if x.claim == claim + tag)
                if v.passed is False:
                    add(Verdict("info.hypothesis_necessity." + claim + tag, False, v.lhs, v.rhs, "!=", None,
                                "equality fails where its hypothesis is not met"))

    try:
        nonisolated = [x for x in range(n) if g.adj[x]]
        ok = sum(decomposition_identity_check(g, x) for x in nonisolated)
        add(_verdict("decomposition_identity", True, ok, len(nonisolated), "=="))
        add(_verdict("primary_decomposition", True, primary_decomposition_check(g), True, "=="))
        add(_verdict("double_dual", True, double_dual_check(g), True, "=="))
    except ResourceError:
        for claim in ("decomposition_identity", "primary_decomposition", "double_dual"):
            add(Verdict(claim, True, None, None, "==", None, SKIPPED))

    return VerificationReport(
        graph={"n": n, "m": g.m, "edges": [list(e) for e in g.edges]},
        flags=flags,
        invariants=inv,
        oracle=oracle,
        verdicts=verdicts,
        meta={
            "version": __version__,
            "seed": seed,
            "field_chars": list(field_chars),
            "c5_reading": c5_reading,
            "cutoffs": config.CUTOFFS.as_dict(),
        },
    )


# ---------------------------------------------------------------------------
# d = d' search
# ---------------------------------------------------------------------------

@dataclasses.dataclass
class SearchResult:
    counterexample: Optional[Graph]
    d: Optional[int] = None
    d_prime: Optional[int] = None
    reverified: Optional[bool] = None
    exhaustive_checked: int = 0
    exhaustive_candidates: int = 0
    random_drawn: int = 0
    random_candidates: int = 0
    c5_reading: str = "induced"

    def to_json(self) -> dict:
        out = {f.name: getattr(self, f.name) for f in dataclasses.fields(self)}
        g = self.counterexample
        out["counterexample"] = None if g is None else {"n": g.n, "edges": [list(e) for e in g.edges]}
        return out


def _hypothesis_holds(g: Graph, c5_reading: str) -> bool:
    return c5_witness(g, c5_reading) is None and is_vertex_decomposable(g)[0]


def _d_values(g: Graph) -> tuple[int, int]:
    d, dp = d_family(g), d_prime_family(g)
    return (d.size if d else 0), (dp.size if dp else 0)


def search_d_question(
    max_n: int, budget: int, seed: int, exhaustive_n: int = 6, c5_reading: str = "induced"
) -> SearchResult:
    """Look for a C5-free vertex decomposable graph with ``d_G != d'_G``.

    First every labelled graph on up to ``min(exhaustive_n, max_n)``
    vertices, then random G(n, p) graphs with ``n`` up to ``max_n`` until
    ``budget`` of them satisfy the hypothesis.  A hit is recomputed with
    the brute-force engines before being returned.  ``c5_reading`` is as
    in :func:`verify_theorems`.
    """
    _check_reading(c5_reading)
    if max_n > config.CUTOFFS.decomposability:
        raise ResourceError(f"max_n {max_n} exceeds the decomposability cutoff")
    result = SearchResult(None, c5_reading=c5_reading)
    if budget <= 0:
        return result

    def found(g):
        d, dp = _d_values(g)
        if d == dp:
            return False
        bd, bdp = d_brute(g)[0], d_prime_brute(g)[0]
        result.counterexample, result.d, result.d_prime = g, d, dp
        result.reverified = (bd, bdp) == (d, dp)
        return True

    top = min(exhaustive_n, max_n)
    for n in range(top + 1):
        for g in all_labeled_graphs(n):
            result.exhaustive_checked += 1
            if not _hypothesis_holds(g, c5_reading):
                continue
            result.exhaustive_candidates += 1
            if found(g):
                return result

    rng = random.Random(seed)
    low = min(top + 1, max_n)
    draws_allowed = 50 * budget
    while result.random_candidates < budget and result.random_drawn < draws_allowed:
        n = rng.randint(low, max_n)
        g = random_graph(n, rng.uniform(0.1, 0.7), rng)
        result.random_drawn += 1
        if not _hypothesis_holds(g, c5_reading):
            continue
        result.random_candidates += 1
        if found(g):
            return result
    return result
