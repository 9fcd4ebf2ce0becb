import math

import numpy as np
import pytest

from app.linalg.errors import DimensionMismatch, IndexOutOfRange, InvalidArgument, NotSymmetric
from app.linalg.matcore import (
    OpCounter,
    RequiredSet,
    SymmetryCheck,
    as_matrix,
    frobenius_norm,
    matmul,
    norm2_estimate,
    pivot_tol,
    residual_fro,
)
from tests.oracles import jacobi_eigenvalues, matmul_loops


def test_as_matrix_rejects_bad_shapes_and_values():
    with pytest.raises(DimensionMismatch):
        as_matrix([[1.0, 2.0]])
    with pytest.raises(DimensionMismatch):
        as_matrix(np.zeros((0, 0)))
    with pytest.raises(InvalidArgument):
        as_matrix([[1.0, np.nan], [0.0, 1.0]])
    assert as_matrix([[1, 2], [3, 4]]).dtype == np.float64


def test_symmetry_check_tolerance():
    a = np.array([[1.0, 2.0], [2.0 + 1e-9, 1.0]])
    assert not SymmetryCheck().passes(a)
    assert SymmetryCheck(1e-8).passes(a)
    with pytest.raises(NotSymmetric):
        SymmetryCheck().require(a)
    with pytest.raises(InvalidArgument):
        SymmetryCheck(-1.0)


def test_required_set_validation():
    assert RequiredSet.trailing(5, 2).indices == (4, 5)
    assert RequiredSet.of(4, [3, 1, 3]).indices == (1, 3)
    assert list(RequiredSet.of(4, [2, 4]).mask()) == [False, True, False, True]
    assert 3 in RequiredSet.all(3)
    with pytest.raises(IndexOutOfRange):
        RequiredSet.of(3, [0])
    with pytest.raises(IndexOutOfRange):
        RequiredSet.of(3, [4])
    with pytest.raises(InvalidArgument):
        RequiredSet.of(3, [])
    with pytest.raises(InvalidArgument):
        RequiredSet.trailing(3, 4)


def test_pivot_tol_uses_max_row_sum():
    a = np.array([[1.0, -3.0], [0.5, 0.5]])
    assert pivot_tol(a) == pytest.approx(1e-12 * 5.0)


def test_matmul_identity_and_involution():
    i2 = np.eye(2)
    swap = np.array([[0.0, 1.0], [1.0, 0.0]])
    assert np.array_equal(matmul(i2, i2), i2)
    assert np.array_equal(matmul(swap, swap), i2)


def test_matmul_matches_triple_loop_and_counts_cube(rng):
    a = rng.uniform(-1, 1, (4, 4))
    b = rng.uniform(-1, 1, (4, 4))
    counter = OpCounter()
    np.testing.assert_allclose(matmul(a, b, counter), matmul_loops(a, b), rtol=0, atol=1e-14)
    assert counter.muldiv == 64
    assert counter.sqrt == 0


def test_matmul_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        matmul(np.eye(2), np.eye(3))


def test_frobenius_norm_examples():
    assert frobenius_norm(np.zeros((3, 3))) == 0.0
    assert frobenius_norm(np.eye(3)) == pytest.approx(math.sqrt(3))
    assert frobenius_norm(np.array([[1.0, 2.0], [2.0, 1.0]])) == pytest.approx(math.sqrt(10))


def test_norm2_estimate_examples():
    assert norm2_estimate(np.zeros((3, 3))) == (0.0, 0.0)
    est = norm2_estimate(np.diag([3.0, 1.0]))
    assert est.spectral == pytest.approx(3.0, abs=1e-12)
    assert est.frobenius == pytest.approx(math.sqrt(10))


def test_norm2_estimate_matches_jacobi_eigenvalues(rng):
    upper = np.triu(rng.uniform(-1, 1, (5, 5)))
    a = upper + np.triu(upper, 1).T
    expected = max(abs(x) for x in jacobi_eigenvalues(a.tolist()))
    assert norm2_estimate(a, iters=20000, tol=0.0).spectral == pytest.approx(expected, abs=1e-8)


def test_norm2_estimate_never_exceeds_frobenius(rng):
    for _ in range(20):
        m = rng.normal(size=(6, 6))
        est = norm2_estimate(m)
        assert est.spectral <= est.frobenius * (1 + 1e-12)


def test_residual_fro_of_exact_inverse():
    a = np.diag([2.0, 4.0])
    assert residual_fro(a, np.diag([0.5, 0.25])) == 0.0


def test_op_counter_tallies():
    counter = OpCounter()
    counter.mul(3)
    counter.mul()
    counter.root(2)
    assert (counter.muldiv, counter.sqrt) == (4, 2)
