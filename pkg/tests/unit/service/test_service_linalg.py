import numpy as np
import pytest
from core.exceptions import ShapeMismatchError, SingularMatrixError
from models.matrix import Matrix
from service.gf import field_make
from service.linalg import (all_vectors, kernel, mat_inv, mat_mul, rank, rref, row_basis, solve,
                            span_vectors, transpose)

@pytest.mark.linalg
def test_rref_gf2(gf2):
    A = Matrix.from_rows(gf2, [[1, 1, 0], [0, 1, 1], [1, 0, 1]])

    R, r, pivots = rref(A)

    assert r == 2
    assert pivots == (0, 1)
    assert R.to_rows() == [(1, 0, 1), (0, 1, 1), (0, 0, 0)]
    assert rank(A) == 2
    assert row_basis(A).to_rows() == [(1, 0, 1), (0, 1, 1)]

@pytest.mark.linalg
def test_kernel_gf2(gf2):
    A = Matrix.from_rows(gf2, [[1, 1, 0], [0, 1, 1]])

    K = kernel(A)

    assert K.to_rows() == [(1, 1, 1)]
    assert not mat_mul(A, transpose(K)).entries.any()

@pytest.mark.linalg
def test_kernel_full_rank(gf3):
    K = kernel(Matrix.identity(gf3, 3))

    assert K.rows == 0
    assert K.cols == 3

@pytest.mark.linalg
def test_mat_inv_gf3(gf3):
    A = Matrix.from_rows(gf3, [[1, 1], [0, 1]])

    B = mat_inv(A)

    assert B.to_rows() == [(1, 2), (0, 1)]
    assert mat_mul(A, B) == Matrix.identity(gf3, 2)

@pytest.mark.linalg
@pytest.mark.parametrize('q', [2, 4, 5, 9])
def test_mat_inv_random(q, rng):
    spec = field_make(q)
    checked = 0
    while checked < 5:
        A = Matrix(spec, rng.integers(q, size=(4, 4)).astype(np.uint8))
        if rank(A) < 4:
            continue
        assert mat_mul(A, mat_inv(A)) == Matrix.identity(spec, 4)
        assert mat_mul(mat_inv(A), A) == Matrix.identity(spec, 4)
        checked += 1

@pytest.mark.linalg
def test_mat_inv_singular(gf2):
    with pytest.raises(SingularMatrixError) as excinfo:
        mat_inv(Matrix.from_rows(gf2, [[1, 1], [1, 1]]))

    assert excinfo.value.detail == 'Матрица вырождена!'

@pytest.mark.linalg
def test_mat_inv_not_square(gf2):
    with pytest.raises(ShapeMismatchError) as excinfo:
        mat_inv(Matrix.zeros(gf2, 2, 3))

    assert excinfo.value.detail == 'Обратная матрица существует только у квадратной, получено 2x3!'

@pytest.mark.linalg
def test_mat_mul_shape(gf2):
    A = Matrix.zeros(gf2, 2, 3)

    with pytest.raises(ShapeMismatchError) as excinfo:
        mat_mul(A, A)

    assert excinfo.value.detail == 'Нельзя умножить 2x3 на 2x3!'

@pytest.mark.linalg
def test_solve(gf3):
    gf5 = field_make(5)
    A = Matrix.from_rows(gf5, [[1, 2], [3, 4]])

    assert solve(A, [3, 2]) == (1, 1)
    assert solve(Matrix.from_rows(gf3, [[1, 1], [1, 1]]), [0, 1]) is None

@pytest.mark.linalg
def test_solve_length(gf2):
    with pytest.raises(ShapeMismatchError):
        solve(Matrix.identity(gf2, 2), [1, 0, 1])

@pytest.mark.linalg
def test_span_vectors(gf3):
    A = Matrix.from_rows(gf3, [[1, 0, 2], [0, 1, 1]])

    vectors = span_vectors(A)

    assert vectors.shape == (9, 3)
    assert len({tuple(v) for v in vectors.tolist()}) == 9
    assert all_vectors(gf3, 2).shape == (9, 2)
    assert all_vectors(gf3, 0).shape == (1, 0)
