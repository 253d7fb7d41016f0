import random

import pytest
from hypothesis import given, strategies as st

from repunit_toric.intlinalg import (
    det,
    dot,
    kernel_basis,
    maximal_minors,
    rank,
    row_hnf,
    size_reduce,
    xgcd,
)


@given(st.integers(min_value=-10**6, max_value=10**6), st.integers(min_value=-10**6, max_value=10**6))
def test_xgcd_identity(a, b):
    g, x, y = xgcd(a, b)
    assert g == a * x + b * y
    assert g >= 0
    if a or b:
        assert a % g == 0 and b % g == 0


def test_rank_and_det():
    assert rank(((1, 0), (0, 1))) == 2
    assert rank(((0, 0), (0, 0))) == 0
    assert rank(((1, 2), (2, 4))) == 1
    assert det(((2, 1), (1, 1))) == 1
    assert det(((1, 2), (2, 4))) == 0
    assert det(((0, 1), (1, 0))) == -1
    assert det(((3,),)) == 3


def test_kernel_basis_of_weight_row():
    w = (15, 18, 24, 36)
    basis = kernel_basis((w,))
    assert len(basis) == 3
    for v in basis:
        assert dot(w, v) == 0
    # every short integer vector orthogonal to w lies in the row span
    span = row_hnf(basis)
    rng = random.Random(5)
    found = 0
    while found < 25:
        v = tuple(rng.randint(-6, 6) for _ in range(4))
        if any(v) and dot(w, v) == 0:
            assert row_hnf(basis + (v,)) == span
            found += 1


def test_kernel_basis_edge_cases():
    assert kernel_basis(((1, 0), (0, 1))) == ()
    assert kernel_basis(((5,),)) == ()
    basis = kernel_basis(((0, 0, 0),))
    assert row_hnf(basis) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_row_hnf_known():
    assert row_hnf(((0, 1), (1, 0))) == ((1, 0), (0, 1))
    assert row_hnf(((2, 4),)) == ((2, 4),)
    assert row_hnf(((2, 4), (1, 2))) == ((1, 2),)
    assert row_hnf(((6,), (4,))) == ((2,),)


@given(st.integers(min_value=0, max_value=2**32))
def test_row_hnf_invariant_under_row_mixing(seed):
    rng = random.Random(seed)
    rows = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(3)]
    mixed = [list(r) for r in rows]
    for _ in range(6):
        i, j = rng.sample(range(3), 2)
        c = rng.randint(-3, 3)
        mixed[i] = [x + c * y for x, y in zip(mixed[i], mixed[j])]
    rng.shuffle(mixed)
    assert row_hnf(tuple(tuple(r) for r in rows)) == row_hnf(tuple(tuple(r) for r in mixed))


def test_maximal_minors_small_weight_matrix():
    rows = ((2, -3, 1), (2, 2, -3))
    assert maximal_minors(rows) == (7, -8, 10)
    with pytest.raises(ValueError):
        maximal_minors(((1, 2, 3),))


def test_size_reduce_preserves_lattice():
    rows = ((10, -7, 1, 0), (13, -9, 0, 1), (3, -2, -1, 1))
    small = size_reduce(rows)
    assert row_hnf(small) == row_hnf(rows)
    assert max(abs(x) for r in small for x in r) <= max(abs(x) for r in rows for x in r)
