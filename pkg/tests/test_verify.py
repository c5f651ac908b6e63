import json

import pytest
from hypothesis import given

from conftest import graphs
from edgeideal.errors import InputError, ResourceError
from edgeideal.graph import Graph, cycle_graph, path_graph, whisker
from edgeideal.complexes import betti_table
from edgeideal.decomposability import find_induced_c5, is_vertex_decomposable
from edgeideal.invariants import (
    bight,
    c_number,
    d_brute,
    d_prime_brute,
    d_prime_number,
    is_unmixed,
    min_max_maximal_independent,
)
from edgeideal.generators import labeled_corpus
from edgeideal.verify import SKIPPED, classify, dumps, search_d_question, verify_theorems

P5 = path_graph(5)
C4 = cycle_graph(4)
C5 = cycle_graph(5)
PRISM = Graph.from_edges(6, [(0, 3), (0, 4), (0, 5), (1, 2), (1, 4), (1, 5), (2, 3), (2, 5), (3, 4)])
GATED = ("reg_eq_c", "pd_eq_bight", "bight_eq_dprime", "depth_eq_min_mis", "cm_iff_unmixed")


def test_path_passes_everything():
    r = verify_theorems(P5)
    assert r.ok
    assert r.verdict("reg_eq_c@char0").applicable
    assert r.invariants["c"] == 2 and r.oracle["0"]["reg"] == 2
    # {0, 2, 3} is a minimal cover, so bight is 3 and depth is 2
    assert r.invariants["bight"] == r.invariants["d_prime"] == r.oracle["0"]["pd"] == 3
    assert r.oracle["0"]["depth"] == r.invariants["min_maximal_independent"] == 2


def test_pentagon_records_hypothesis_necessity():
    r = verify_theorems(C5)
    assert r.ok
    assert not any(r.verdict(c + "@char0").applicable for c in GATED)
    info = r.verdict("info.hypothesis_necessity.reg_eq_c@char0")
    assert (info.lhs, info.rhs) == (2, 1)
    assert r.verdict("chain.c_le_d").passed


def test_square_is_gated_off():
    r = verify_theorems(C4)
    assert r.ok and r.flags["vertex_decomposable"] is False
    assert r.verdict("terai@char0").passed


def test_prism_under_both_readings():
    r = verify_theorems(PRISM)
    failed = {v.claim for v in r.failures}
    assert failed == {"reg_eq_c@char0"}
    assert (r.invariants["d"], r.invariants["d_prime"]) == (3, 4)
    assert "5-cycle with chords" in r.verdict("reg_eq_c@char0").note
    assert verify_theorems(PRISM, c5_reading="subgraph").ok
    with pytest.raises(InputError):
        verify_theorems(PRISM, c5_reading="minor")


def test_report_schema_and_determinism():
    a = dumps(verify_theorems(whisker(C4), (0, 2), seed=5).to_json())
    b = dumps(verify_theorems(whisker(C4), (0, 2), seed=5).to_json())
    assert a == b
    data = json.loads(a)
    assert set(data) == {"graph", "flags", "invariants", "oracle", "verdicts", "meta"}
    assert data["meta"]["seed"] == 5 and data["meta"]["field_chars"] == [0, 2]
    for v in data["verdicts"]:
        if v["applicable"] and v["passed"] is not None:
            assert v["lhs"] is not None


def test_cutoff_marks_claims_skipped(cutoffs):
    cutoffs(oracle=3)
    r = verify_theorems(P5)
    v = r.verdict("reg_eq_c@char0")
    assert v.passed is None and v.note == SKIPPED
    assert r.ok


def test_classify_flags():
    flags = classify(C5)
    assert flags["c5_witness"] and not flags["c5_free"]
    assert flags["vertex_decomposable"] and flags["certificate"]
    assert classify(PRISM)["c5_free"] and not classify(PRISM)["c5_subgraph_free"]


@given(graphs(max_n=7))
def test_gating_soundness(g):
    r = verify_theorems(g)
    hyp = r.flags["c5_free"] and r.flags["vertex_decomposable"]
    for claim in GATED:
        assert r.verdict(claim + "@char0").applicable == bool(hyp)
    assert r.verdict("d_eq_dprime.chordal").applicable == r.flags["chordal"]


@given(graphs(max_n=7))
def test_subgraph_reading_has_no_failures(g):
    assert verify_theorems(g, c5_reading="subgraph").ok


def test_search_budget_zero():
    r = search_d_question(6, 0, seed=1)
    assert r.counterexample is None and r.exhaustive_checked == 0


def test_search_induced_reading_finds_a_verified_counterexample():
    r = search_d_question(6, 10, seed=2024)
    g = r.counterexample
    assert g is not None and r.reverified
    assert (d_brute(g)[0], d_prime_brute(g)[0]) == (r.d, r.d_prime) and r.d != r.d_prime
    assert json.loads(dumps(r.to_json()))["counterexample"]["n"] == g.n


def test_search_subgraph_reading_exhaustive_six_is_absent():
    r = search_d_question(6, 1, seed=0, c5_reading="subgraph")
    assert r.counterexample is None
    assert r.exhaustive_checked == sum(2 ** (n * (n - 1) // 2) for n in range(7))


def test_search_cutoff(cutoffs):
    cutoffs(decomposability=5)
    with pytest.raises(ResourceError):
        search_d_question(6, 1, seed=0)


def test_whisker_closure():
    for gid, base in labeled_corpus(5):
        w = whisker(base)
        if find_induced_c5(w) is not None:
            continue
        assert is_vertex_decomposable(w)[0], gid
        t = betti_table(w)
        lo, hi = min_max_maximal_independent(w)
        assert t.reg == c_number(w), gid
        assert t.pd == bight(w) == d_prime_number(w), gid
        assert w.n - t.pd == lo and (w.n - t.pd == hi) == is_unmixed(w), gid
