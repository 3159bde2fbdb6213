import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from clustertilt import linalg as la

P = 7  # a small prime makes dependent rows common


def test_is_prime():
    assert [n for n in range(20) if la.is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert la.is_prime(la.DEFAULT_PRIME)


def test_rref_by_hand():
    # over GF(7): (2,4,6) = 2*(1,2,3) and (4,1,5) = 4*(1,2,3), so rank 2
    m = la.as_matrix([[2, 4, 6], [4, 1, 5], [1, 0, 1]], P)
    r, rk = la.rref(m, P)
    assert rk == 2
    assert r[:2].tolist() == [[1, 0, 1], [0, 1, 1]]
    m = la.as_matrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]], P)
    r, rk = la.rref(m, P)
    assert rk == 2
    assert r[:2].tolist() == [[1, 0, 1], [0, 1, 1]]


def test_as_matrix_reduces_negatives():
    assert la.as_matrix([[-1, 8]], P).tolist() == [[6, 1]]
    with pytest.raises(ValueError):
        la.as_matrix([1, 2, 3], P)


def test_kernel_and_image_by_hand():
    m = la.as_matrix([[1, 1, 0], [0, 0, 1]], P)
    ker = la.kernel_columns(m, P)
    assert ker.shape == (3, 1)
    assert not (m @ ker % P).any()
    assert la.image_basis(m, P).dim == 2


def test_solve_and_inverse():
    m = la.as_matrix([[1, 2], [3, 4]], P)
    x = la.solve(m, la.identity(2), P)
    assert np.array_equal(la.matmul(m, x, P), la.identity(2))
    assert np.array_equal(la.inverse(m, P), x)
    singular = la.as_matrix([[1, 2], [2, 4]], P)
    assert la.inverse(singular, P) is None
    assert la.solve(singular, la.as_matrix([[1], [0]], P), P) is None
    with pytest.raises(ValueError):
        la.solve(m, la.zeros(3, 1), P)


def test_quotient_basis_kills_subspace():
    sub = la.Subspace.span(la.as_matrix([[1], [2], [3]], P), P)
    proj, section = la.quotient_basis(3, sub)
    assert proj.shape == (2, 3)
    assert not la.matmul(proj, sub.columns(), P).any()
    assert np.array_equal(la.matmul(proj, section, P), la.identity(2))


def test_empty_shapes():
    assert la.rank(la.zeros(0, 3), P) == 0
    assert la.kernel_columns(la.zeros(0, 3), P).shape == (3, 3)
    assert la.matmul(la.zeros(2, 0), la.zeros(0, 4), P).shape == (2, 4)
    assert la.inverse(la.zeros(0, 0), P).shape == (0, 0)


matrices = st.tuples(st.integers(1, 5), st.integers(1, 5)).flatmap(
    lambda s: arrays(np.int64, s, elements=st.integers(0, P - 1))
)


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rank_nullity(m):
    assert la.rank(m, P) + la.kernel_columns(m, P).shape[1] == m.shape[1]
    assert not (m @ la.kernel_columns(m, P) % P).any()


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rref_idempotent_and_rank_of_transpose(m):
    r, rk = la.rref(m, P)
    r2, rk2 = la.rref(r, P)
    assert rk == rk2 and np.array_equal(r, r2)
    assert la.rank(m.T.copy(), P) == rk


@settings(max_examples=60, deadline=None)
@given(matrices, st.integers(0, 2**31))
def test_solve_recovers_consistent_systems(m, seed):
    x = np.random.default_rng(seed).integers(0, P, size=(m.shape[1], 2))
    b = la.matmul(m, x, P)
    y = la.solve(m, b, P)
    assert y is not None and np.array_equal(la.matmul(m, y, P), b)
