from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spechtlab.errors import DimensionMismatch
from spechtlab.fields import GF, QQ
from spechtlab.linalg import (
    ExactMatrix,
    bareiss_rank,
    column_space_contains,
    column_space_intersection,
    in_column_space,
    matrix_kernel,
    matrix_rank,
    same_column_space,
    vectors_to_matrix,
)


def naive_rank(rows, p=0):
    # schoolbook elimination, Fractions or residues
    M = [[Fraction(x) if not p else x % p for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(M[0]) if M else 0
    while rank < len(M) and col < ncols:
        piv = next((i for i in range(rank, len(M)) if M[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = (1 / M[rank][col]) if not p else pow(M[rank][col], -1, p)
        for i in range(len(M)):
            if i != rank and M[i][col] != 0:
                f = M[i][col] * inv
                M[i] = [a - f * b if not p else (a - f * b) % p for a, b in zip(M[i], M[rank])]
        rank += 1
        col += 1
    return rank


int_matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=120, deadline=None)
@given(int_matrices)
def test_rank_matches_naive(rows):
    for F in (QQ, GF(2), GF(3), GF(7)):
        M = ExactMatrix(F, [[F(x) for x in r] for r in rows])
        assert matrix_rank(M) == naive_rank(rows, F.p)
    assert bareiss_rank([list(r) for r in rows]) == naive_rank(rows)


@settings(max_examples=80, deadline=None)
@given(int_matrices)
def test_kernel_vectors_are_killed(rows):
    for F in (QQ, GF(2), GF(5)):
        M = ExactMatrix(F, [[F(x) for x in r] for r in rows])
        K = matrix_kernel(M)
        assert len(K) == M.ncols - M.rank()
        for v in K:
            assert all(x == 0 for x in M.apply(v))


def test_rank_big_entries():
    # rational path must survive entries beyond machine words
    big = 2**80
    M = ExactMatrix(QQ, [[QQ(big), QQ(big + 1)], [QQ(big + 1), QQ(big + 2)]])
    assert M.rank() == 2
    assert np.linalg.matrix_rank(np.array([[1.0, 2.0], [2.0, 4.0]])) == ExactMatrix(QQ, [[1, 2], [2, 4]]).rank()


def test_mod2_rank_drop():
    M = ExactMatrix(GF(2), [[1, 1], [1, 1], [0, 0]])
    assert M.rank() == 1
    assert ExactMatrix(QQ, [[1, 1], [1, -1]]).rank() == 2
    assert ExactMatrix(GF(2), [[1, 1], [1, -1]]).rank() == 1


def test_dimension_mismatch():
    A = ExactMatrix.identity(QQ, 2)
    B = ExactMatrix.identity(QQ, 3)
    with pytest.raises(DimensionMismatch):
        A @ B


def test_column_space_helpers():
    A = vectors_to_matrix(QQ, [[1, 0, 0], [0, 1, 0]], 3)
    B = vectors_to_matrix(QQ, [[1, 1, 0]], 3)
    C = vectors_to_matrix(QQ, [[0, 1, 1]], 3)
    assert in_column_space(A, [QQ(2), QQ(3), QQ(0)])
    assert column_space_contains(A, B) and not column_space_contains(A, C)
    assert same_column_space(A, vectors_to_matrix(QQ, [[1, 1, 0], [1, -1, 0]], 3))
    I = column_space_intersection(A, vectors_to_matrix(QQ, [[1, 1, 0], [0, 1, 1]], 3))
    assert I.rank() == 1 and column_space_contains(I, B)


@settings(max_examples=60, deadline=None)
@given(int_matrices, int_matrices)
def test_matmul_associates_with_apply(a, b):
    A = ExactMatrix(QQ, [[QQ(x) for x in r] for r in a])
    if len(b) != A.ncols:
        return
    B = ExactMatrix(QQ, [[QQ(x) for x in r] for r in b])
    v = [QQ(i + 1) for i in range(B.ncols)]
    assert (A @ B).apply(v) == A.apply(B.apply(v))
