from functools import reduce
from itertools import product
from typing import Sequence

import numpy as np

from core.exceptions import ShapeMismatchError, SingularMatrixError
from models.field import FieldSpec, FieldAutomorphism
from models.matrix import Matrix

def _eliminate(spec: FieldSpec, entries: np.ndarray, limit: int | None = None) -> tuple[np.ndarray, list[int]]:
    R = entries.astype(np.uint8, copy=True)
    rows, cols = R.shape
    limit = cols if limit is None else limit
    pivots: list[int] = []
    r = 0
    for c in range(limit):
        if r == rows:
            break
        nonzero = np.nonzero(R[r:, c])[0]
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            R[[r, pivot]] = R[[pivot, r]]
        R[r] = spec.mul[spec.inv[R[r, c]], R[r]]
        factors = spec.neg[R[:, c]]
        factors[r] = 0
        R = spec.add[R, spec.mul[factors[:, None], R[r][None, :]]]
        pivots.append(c)
        r += 1
    return R, pivots

def rref(A: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    R, pivots = _eliminate(A.spec, A.entries)
    return Matrix(A.spec, R), len(pivots), tuple(pivots)

def rank(A: Matrix) -> int:
    return rref(A)[1]

def row_basis(A: Matrix) -> Matrix:
    R, r, _ = rref(A)
    return Matrix(A.spec, R.entries[:r])

def kernel(A: Matrix) -> Matrix:
    spec = A.spec
    R, r, pivots = rref(A)
    free = [c for c in range(A.cols) if c not in pivots]
    basis = np.zeros((len(free), A.cols), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, p in enumerate(pivots):
            basis[i, p] = spec.neg[R.entries[row, f]]
    return row_basis(Matrix(spec, basis)) if len(free) else Matrix.zeros(spec, 0, A.cols)

def _product(spec: FieldSpec, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    inner = left.shape[-1]
    shape = left.shape[:-1] + right.shape[-1:]
    if inner == 0:
        return np.zeros(shape, dtype=np.uint8)
    if spec.m == 1:
        return (np.matmul(left.astype(np.int64), right.astype(np.int64)) % spec.p).astype(np.uint8)
    terms = (spec.mul[left[..., j:j + 1], right[j:j + 1, :]] for j in range(inner))
    return reduce(lambda acc, term: spec.add[acc, term], terms)

def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    A.spec.check(B.spec)
    if A.cols != B.rows:
        raise ShapeMismatchError(f'Нельзя умножить {A.rows}x{A.cols} на {B.rows}x{B.cols}!')
    return Matrix(A.spec, _product(A.spec, A.entries, B.entries))

def mat_inv(A: Matrix) -> Matrix:
    if A.rows != A.cols:
        raise ShapeMismatchError(f'Обратная матрица существует только у квадратной, получено {A.rows}x{A.cols}!')
    n = A.rows
    augmented = np.hstack([A.entries, np.eye(n, dtype=np.uint8)])
    R, pivots = _eliminate(A.spec, augmented, limit=n)
    if len(pivots) < n:
        raise SingularMatrixError()
    return Matrix(A.spec, R[:, n:])

def transpose(A: Matrix) -> Matrix:
    return Matrix(A.spec, np.ascontiguousarray(A.entries.T))

def apply_sigma(sigma: FieldAutomorphism, A: Matrix) -> Matrix:
    return Matrix(A.spec, sigma(A.entries))

def scale(A: Matrix, a: int) -> Matrix:
    return Matrix(A.spec, A.spec.mul[a, A.entries])

def vstack(spec: FieldSpec, cols: int, *parts: Matrix) -> Matrix:
    blocks = [part.entries for part in parts if part.rows]
    if not blocks:
        return Matrix.zeros(spec, 0, cols)
    return Matrix(spec, np.vstack(blocks))

def solve(A: Matrix, b: Sequence[int]) -> tuple[int, ...] | None:
    spec = A.spec
    if len(b) != A.rows:
        raise ShapeMismatchError(f'Правая часть длины {len(b)} не подходит к {A.rows} уравнениям!')
    column = np.array(list(b), dtype=np.uint8).reshape(-1, 1)
    R, pivots = _eliminate(spec, np.hstack([A.entries, column]))
    if A.cols in pivots:
        return None
    x = [0] * A.cols
    for row, p in enumerate(pivots):
        x[p] = int(R[row, -1])
    return tuple(x)

def all_vectors(spec: FieldSpec, n: int) -> np.ndarray:
    if n == 0:
        return np.zeros((1, 0), dtype=np.uint8)
    return np.array(list(product(range(spec.q), repeat=n)), dtype=np.uint8).reshape(-1, n)

def span_vectors(A: Matrix) -> np.ndarray:
    # все q^rows линейных комбинаций строк, в порядке кодов коэффициентов
    coefficients = all_vectors(A.spec, A.rows)
    return _product(A.spec, coefficients, A.entries)

def batch_product(spec: FieldSpec, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    return _product(spec, left, right)
