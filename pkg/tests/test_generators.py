import random

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from edgeideal.decomposability import is_bipartite, is_c5_free, is_chordal, is_forest, is_vertex_decomposable
from edgeideal.errors import InputError, ResourceError
from edgeideal.generators import (
    BASE_FAMILIES,
    GeneratorSpec,
    builtin_corpus,
    generate,
    labeled_corpus,
    random_bipartite_vd,
)
from edgeideal.graph import connected_components, cycle_graph, path_graph


def test_path():
    assert generate(GeneratorSpec("path", 4, 7)) == path_graph(4)


def test_whiskered_square():
    g = generate(GeneratorSpec("whisker", 4, 0, "cycle"))
    assert g.n == 8 and g.m == 8
    assert is_c5_free(g)
    assert is_vertex_decomposable(g)[0]
    assert not is_chordal(g)


def test_tree_seed_42():
    g = generate(GeneratorSpec("tree", 6, 42))
    assert g.n == 6 and g.m == 5
    assert len(connected_components(g)) == 1 and is_forest(g)


def test_spec_validation():
    with pytest.raises(InputError):
        GeneratorSpec("wheel", 4)
    with pytest.raises(InputError):
        GeneratorSpec("whisker", 4)
    with pytest.raises(InputError):
        GeneratorSpec("path", -1)


def test_rejection_budget():
    with pytest.raises(ResourceError):
        random_bipartite_vd(6, random.Random(0), budget=0)


def test_labels():
    assert GeneratorSpec("tree", 5, 3).label == "tree-5-s3"
    assert GeneratorSpec("whisker", 3, 1, "path").label == "whisker-of-path-3-s1"


def test_corpora():
    assert sum(1 for _ in labeled_corpus(4)) == 1 + 1 + 2 + 8 + 64
    ids = [gid for gid, _ in builtin_corpus(seed=1, per_size=4)]
    assert len(ids) == len(set(ids))
    assert ids == [gid for gid, _ in builtin_corpus(seed=1, per_size=4)]


@given(st.sampled_from(BASE_FAMILIES), st.integers(0, 9), st.integers(0, 10**6))
def test_generation_is_deterministic(family, n, seed):
    assume(family != "cycle" or n >= 3)
    spec = GeneratorSpec(family, n, seed)
    assert generate(spec) == generate(spec)
    assert generate(spec).n == n


@given(st.integers(1, 10), st.integers(0, 10**6))
def test_family_properties(n, seed):
    assert is_forest(generate(GeneratorSpec("tree", n, seed)))
    assert len(connected_components(generate(GeneratorSpec("tree", n, seed)))) == 1
    assert is_forest(generate(GeneratorSpec("forest", n, seed)))
    assert is_chordal(generate(GeneratorSpec("chordal", n, seed)))
    g = generate(GeneratorSpec("bipartite_vd", min(n, 8), seed))
    assert is_bipartite(g) and is_vertex_decomposable(g)[0]
    w = generate(GeneratorSpec("whisker", n, seed, "chordal"))
    assert w.n == 2 * n and is_vertex_decomposable(w)[0]


def test_cycle_family():
    assert generate(GeneratorSpec("cycle", 5)) == cycle_graph(5)
    with pytest.raises(InputError):
        generate(GeneratorSpec("cycle", 2))
