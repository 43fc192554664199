import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swissag.fields import build_field
from swissag.linalg import (RowReducer, gram_is_zero, nullspace, rank,
                            rowspace_contained, rowspaces_equal, rref)

F4 = build_field(2, 2)
F64 = build_field(2, 6)


def test_rref_known_matrix():
    mat = np.array([[1, 2, 3], [2, 3, 1], [3, 1, 2]], dtype=np.uint16)
    red, pivots = rref(F4, mat)
    assert pivots == [0, 1]
    assert rank(F4, mat) == 2
    # reduced rows have unit pivots and cleared pivot columns
    assert red[0][0] == 1 and red[1][1] == 1
    assert red[0][1] == 0 and red[1][0] == 0


def test_rank_nullity_and_orthogonality():
    rng = np.random.default_rng(7)
    mat = rng.integers(0, 64, size=(6, 15)).astype(np.uint16)
    r = rank(F64, mat)
    ns = nullspace(F64, mat)
    assert ns.shape == (15 - r, 15)
    assert rank(F64, ns) == 15 - r
    for row in mat:
        for v in ns:
            assert F64.vdot(row, v) == 0


def test_rowspace_containment():
    a = np.array([[1, 0, 1], [0, 1, 1]], dtype=np.uint16)
    b = np.array([[1, 1, 0]], dtype=np.uint16)  # = row0 + row1 over GF(2^k)
    assert rowspace_contained(F4, b, a)
    assert not rowspace_contained(F4, a, b)
    assert rowspaces_equal(F4, a, np.vstack([a, b]))


def test_gram_is_zero_small():
    iso = np.array([[1, 1, 0, 0], [0, 0, 1, 1]], dtype=np.uint16)
    assert gram_is_zero(build_field(2, 1), iso)
    assert not gram_is_zero(build_field(2, 1), np.array([[1, 1, 1]], dtype=np.uint16))
    assert gram_is_zero(F64, np.zeros((0, 5), dtype=np.uint16))  # vacuous


def test_row_reducer_incremental():
    red = RowReducer(F4, 4)
    assert red.offer(np.array([0, 1, 2, 3], dtype=np.uint16))
    assert not red.offer(np.array([0, 2, 3, 1], dtype=np.uint16) * 0)  # zero row
    assert red.offer(np.array([1, 1, 1, 1], dtype=np.uint16))
    assert not red.offer(np.array([1, 0, 3, 2], dtype=np.uint16))  # dependent
    assert red.rank == 2 and red.pivots == [0, 1]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**30))
def test_rank_properties_random(seed):
    rng = np.random.default_rng(seed)
    rows, cols = int(rng.integers(1, 7)), int(rng.integers(1, 9))
    mat = rng.integers(0, 64, size=(rows, cols)).astype(np.uint16)
    r = rank(F64, mat)
    assert r <= min(rows, cols)
    # rank is invariant under a row shuffle and under appending a row sum
    perm = rng.permutation(rows)
    assert rank(F64, mat[perm]) == r
    extra = mat[0].copy()
    for row in mat[1:]:
        extra = F64.vadd(extra, row)
    assert rank(F64, np.vstack([mat, extra[None, :]])) == r
    assert rank(F64, nullspace(F64, mat)) == cols - r


def test_gf729_linear_algebra():
    # odd characteristic goes through the table-based add path
    f729 = build_field(3, 6)
    rng = np.random.default_rng(11)
    mat = rng.integers(0, 729, size=(4, 9)).astype(np.uint16)
    r = rank(f729, mat)
    ns = nullspace(f729, mat)
    assert ns.shape[0] == 9 - r
    for row in mat:
        for v in ns:
            assert f729.vdot(row, v) == 0
    with pytest.raises(ValueError):
        rank(f729, np.zeros(3, dtype=np.uint16))  # not 2-D
