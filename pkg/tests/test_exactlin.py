from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from triorbit.exactlin import GF, QQ, DimensionMismatchError, Matrix, kernel, parse_scalar, rank, rref, solve

small = st.integers(-4, 4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    rows = draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_rows(rows, QQ, cols=c)


def test_rank_trivial_examples():
    assert rank(Matrix.identity(3)) == 3
    assert rank(Matrix.zeros(2, 5)) == 0
    assert rank(Matrix.from_rows([[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert kernel(Matrix.identity(2))[0] == []
    basis, _ = kernel(Matrix.from_rows([[1, -1]]))
    assert len(basis) == 1
    v = basis[0]
    assert v[0] == v[1] != 0


def test_kernel_of_rank_three_matrix():
    a = Matrix.from_rows([[1, 0, 2, 1, 0, 3], [0, 1, 1, 0, 2, 1], [1, 1, 3, 1, 2, 4], [2, -1, 0, 5, 1, 1]])
    assert rank(a) == 3
    basis, _ = kernel(a)
    assert len(basis) == 3
    for v in basis:
        assert all(x == 0 for x in a.apply(v))


def test_solve_examples():
    b = (Fraction(3), Fraction(-2))
    assert tuple(solve(Matrix.identity(2), b)) == b
    assert solve(Matrix.zeros(2, 2), (1, 0)) is None
    assert tuple(solve(Matrix.from_rows([[1, 1], [0, 1]]), (3, 2))) == (1, 2)


def test_rationals_lowest_terms():
    x = QQ(Fraction(6, -4))
    assert (x.numerator, x.denominator) == (-3, 2)
    assert parse_scalar("-6/4") == Fraction(-3, 2)


def test_prime_field_arithmetic():
    f = GF(7)
    assert f(10) == f(3)
    assert f(3) * f(5) == f(1)
    assert f(1) / f(3) == f(5)
    with pytest.raises(ValueError):
        GF(8)


def test_rank_over_prime_field_differs():
    m = Matrix.from_rows([[1, 1], [1, 3]], GF(2))
    assert rank(m) == 1
    assert rank(Matrix.from_rows([[1, 1], [1, 3]])) == 2


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        Matrix.identity(2) @ Matrix.identity(3)


def test_inverse():
    a = Matrix.from_rows([[2, 1], [1, 1]])
    assert a @ a.inverse() == Matrix.identity(2)


@given(matrices())
def test_rank_matches_sympy(m):
    assert rank(m) == sympy.Matrix(m.rows, m.cols, list(m.entries)).rank()


@given(matrices())
def test_rank_nullity_and_kernel(m):
    basis, free = kernel(m)
    assert rank(m) + len(basis) == m.cols
    assert len(free) == len(basis)
    for v in basis:
        assert all(x == 0 for x in m.apply(v))


@given(matrices())
def test_rank_transpose(m):
    assert rank(m) == rank(m.T)


@given(matrices())
def test_rref_idempotent(m):
    r, pivots = rref(m)
    assert rref(r) == (r, pivots)
    assert len(pivots) == rank(m)


@given(matrices(4, 4), st.lists(small, min_size=4, max_size=4))
def test_solve_consistent(m, x):
    x = x[: m.cols]
    b = m.apply(x)
    sol = solve(m, b)
    assert sol is not None
    assert m.apply(sol) == b
