import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from edgeideal.errors import InputError
from edgeideal.linalg import bareiss_rank, check_field_char, matrix_rank, rank_mod_p, sparse_rank

matrices = st.integers(1, 6).flatmap(
    lambda cols: st.lists(st.lists(st.integers(-4, 4), min_size=cols, max_size=cols), max_size=7)
)


@given(matrices)
def test_bareiss_matches_fraction_elimination(rows):
    assert bareiss_rank(rows) == oracles.rank_fraction(rows)


@given(matrices, st.sampled_from([2, 3, 5, 7]))
def test_modular_rank_matches_fraction_elimination(rows, p):
    assert rank_mod_p(rows, p) == oracles.rank_fraction(rows, p)


def _sparse(rows):
    return [{c: v for c, v in enumerate(r) if v} for r in rows]


@given(matrices, st.sampled_from([0, 2, 3, 5, 7]))
def test_sparse_rank_matches_fraction_elimination(rows, p):
    assert sparse_rank(_sparse(rows), p) == oracles.rank_fraction(rows, p)


@given(st.lists(st.lists(st.integers(-60, 60), min_size=4, max_size=4), max_size=6))
def test_sparse_rank_with_large_entries(rows):
    # non-unit pivots exercise the content division
    assert sparse_rank(_sparse(rows)) == oracles.rank_fraction(rows)


def test_characteristic_matters():
    # det = 2: full rank over Q, rank 1 over GF(2)
    rows = [[1, 1], [1, -1]]
    assert matrix_rank(rows, 0) == 2
    assert matrix_rank(rows, 2) == 1
    assert sparse_rank(_sparse(rows), 0) == 2
    assert sparse_rank(_sparse(rows), 2) == 1


def test_degenerate_shapes():
    assert matrix_rank([], 0) == 0
    assert matrix_rank([[0, 0], [0, 0]], 3) == 0
    assert bareiss_rank([[5]]) == 1


@pytest.mark.parametrize("bad", [1, 4, -3, 2**31 + 11, 2**61 - 1])
def test_field_char_validation(bad):
    with pytest.raises(InputError):
        check_field_char(bad)


@pytest.mark.parametrize("ok", [0, 2, 3, 2**31 - 1])
def test_field_char_accepted(ok):
    assert check_field_char(ok) == ok
