from typing import Sequence

import numpy as np

from config import settings_limits
from core.exceptions import (LengthMismatchError, SingularFormError, NotSymplecticError,
                             UnsupportedAutomorphismError, OutOfRangeError)
from core.logger import get_logger
from models.field import FieldSpec, FieldElement, FieldAutomorphism
from models.forms import BilinearForm, FormPredicates, ReflexiveClass, SymplecticBasis
from models.grassmann import Subspace, PlaneSet
from models.maps import GrassmannMap
from models.matrix import Matrix
from service.grassmann import enumerate_grassmannian, whole_space, meet, subspace_make
from service.linalg import (all_vectors, batch_product, kernel, rank, row_basis, transpose,
                            apply_sigma, scale, span_vectors)

logger = get_logger('forms')

def dot_form(spec: FieldSpec, n: int, sigma2: FieldAutomorphism | None = None) -> BilinearForm:
    identity = FieldAutomorphism(spec, 0)
    return BilinearForm(spec, n, Matrix.identity(spec, n), identity, sigma2 or identity)

def standard_symplectic(spec: FieldSpec, n: int) -> BilinearForm:
    if n % 2:
        raise OutOfRangeError(f'Стандартная симплектическая форма определена только при чётном n, получено n = {n}!')
    k = n // 2
    gram = np.zeros((n, n), dtype=np.uint8)
    for i in range(k):
        gram[i, k + i] = 1
        gram[k + i, i] = spec.neg[1]
    identity = FieldAutomorphism(spec, 0)
    return BilinearForm(spec, n, Matrix(spec, gram), identity, identity)

def _vector(Omega: BilinearForm, x: Sequence[int]) -> np.ndarray:
    if len(x) != Omega.n:
        raise LengthMismatchError(Omega.n, len(x))
    return np.array([int(c) % Omega.spec.q for c in x], dtype=np.uint8).reshape(1, -1)

def _left(Omega: BilinearForm, xs: np.ndarray) -> np.ndarray:
    # строки sigma1(x) * G
    return batch_product(Omega.spec, Omega.sigma1(xs), Omega.gram.entries)

def _pairing(Omega: BilinearForm, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    return batch_product(Omega.spec, _left(Omega, xs), np.ascontiguousarray(Omega.sigma2(ys).T))

def form_eval(Omega: BilinearForm, x: Sequence[int], y: Sequence[int]) -> FieldElement:
    value = _pairing(Omega, _vector(Omega, x), _vector(Omega, y))
    return FieldElement(Omega.spec, int(value[0, 0]))

def is_nonsingular(Omega: BilinearForm) -> bool:
    return rank(Omega.gram) == Omega.n

def scale_form(Omega: BilinearForm, a: int) -> BilinearForm:
    return BilinearForm(Omega.spec, Omega.n, scale(Omega.gram, a), Omega.sigma1, Omega.sigma2)

def normalize_form(Omega: BilinearForm) -> BilinearForm:
    back = Omega.sigma1.inverse()
    return BilinearForm(Omega.spec, Omega.n, apply_sigma(back, Omega.gram),
                        FieldAutomorphism(Omega.spec, 0), back.compose(Omega.sigma2))

def conjugate_form(Omega: BilinearForm) -> BilinearForm:
    return BilinearForm(Omega.spec, Omega.n, transpose(Omega.gram), Omega.sigma2, Omega.sigma1)

def _hermitian_gram(Omega: BilinearForm, G: np.ndarray, sign: int) -> bool:
    spec = Omega.spec
    mirrored = Omega.sigma2(np.ascontiguousarray(G.T))
    if sign < 0:
        mirrored = spec.neg[mirrored]
    return bool(np.array_equal(G, mirrored))

def _line_perps_agree(Omega: BilinearForm) -> bool:
    spec, n = Omega.spec, Omega.n
    back2, back1 = Omega.sigma2.inverse(), Omega.sigma1.inverse()
    for line in enumerate_grassmannian(n, 1, spec):
        x = line.basis.entries
        right = kernel(Matrix(spec, _left(Omega, x)))
        column = batch_product(spec, Omega.gram.entries, np.ascontiguousarray(Omega.sigma2(x).T))
        left = kernel(Matrix(spec, np.ascontiguousarray(column.T)))
        if row_basis(apply_sigma(back2, right)) != row_basis(apply_sigma(back1, left)):
            return False
    return True

def form_predicates(Omega: BilinearForm) -> FormPredicates:
    spec, n = Omega.spec, Omega.n
    nonsingular = is_nonsingular(Omega)
    hermitian_shape = Omega.sigma1.is_identity and not Omega.sigma2.is_identity and Omega.sigma2.is_involution

    if spec.q ** n <= settings_limits.PAIR_TEST_LIMIT:
        vectors = all_vectors(spec, n)
        W = _pairing(Omega, vectors, vectors)
        WT = np.ascontiguousarray(W.T)
        return FormPredicates(
            nonsingular=nonsingular,
            reflexive=bool(np.array_equal(W == 0, WT == 0)),
            symmetric=bool(np.array_equal(W, WT)),
            skew_symmetric=bool(np.array_equal(W, spec.neg[WT])),
            symplectic=bool(np.all(np.diagonal(W) == 0)),
            hermitian=hermitian_shape and bool(np.array_equal(W, Omega.sigma2(WT))),
            skew_hermitian=hermitian_shape and bool(np.array_equal(W, spec.neg[Omega.sigma2(WT)])),
        )

    logger.debug('q^n = %d больше порога, проверка через матрицу Грама', spec.q ** n)
    normal = normalize_form(Omega)
    G = normal.gram.entries
    if normal.sigma2.is_identity:
        symmetric = bool(np.array_equal(G, G.T))
        skew = bool(np.array_equal(G, spec.neg[G.T]))
        symplectic = skew and bool(np.all(np.diagonal(G) == 0))
    else:
        symmetric = skew = symplectic = not G.any()
    return FormPredicates(
        nonsingular=nonsingular,
        reflexive=_line_perps_agree(Omega),
        symmetric=symmetric,
        skew_symmetric=skew,
        symplectic=symplectic,
        hermitian=hermitian_shape and _hermitian_gram(Omega, Omega.gram.entries, 1),
        skew_hermitian=hermitian_shape and _hermitian_gram(Omega, Omega.gram.entries, -1),
    )

def classify_reflexive(Omega: BilinearForm) -> ReflexiveClass:
    if not Omega.sigma1.is_identity:
        raise UnsupportedAutomorphismError()
    predicates = form_predicates(Omega)
    if not predicates.reflexive:
        return ReflexiveClass('not_reflexive')
    if Omega.sigma2.is_identity:
        # в характеристике 2 знакопеременная форма одновременно симметрична
        if predicates.skew_symmetric and (predicates.symplectic or not predicates.symmetric):
            return ReflexiveClass('skew_symmetric')
        if predicates.symmetric:
            return ReflexiveClass('symmetric')
        return ReflexiveClass('not_reflexive')
    if not Omega.sigma2.is_involution:
        return ReflexiveClass('not_reflexive')
    for a in range(1, Omega.spec.q):
        if _hermitian_gram(Omega, Omega.spec.mul[a, Omega.gram.entries], 1):
            return ReflexiveClass('scaled_hermitian', a)
    return ReflexiveClass('not_reflexive')

def _require_nonsingular(Omega: BilinearForm) -> None:
    if not is_nonsingular(Omega):
        raise SingularFormError()

def orth_complement(Omega: BilinearForm, U: Subspace) -> Subspace:
    _require_nonsingular(Omega)
    constraints = Matrix(Omega.spec, _left(Omega, U.basis.entries))
    z = kernel(constraints)
    return Subspace(Omega.spec, Omega.n, row_basis(apply_sigma(Omega.sigma2.inverse(), z)))

def annihilator(U: Subspace) -> Subspace:
    return Subspace(U.spec, U.n, kernel(U.basis))

def form_map(Omega: BilinearForm, k: int) -> GrassmannMap:
    _require_nonsingular(Omega)
    domain = enumerate_grassmannian(Omega.n, k, Omega.spec)
    codomain = enumerate_grassmannian(Omega.n, Omega.n - k, Omega.spec)
    table = tuple(codomain.index(orth_complement(Omega, s)) for s in domain)
    return GrassmannMap(domain, codomain, table)

def annihilator_map(spec: FieldSpec, n: int, k: int) -> GrassmannMap:
    domain = enumerate_grassmannian(n, k, spec)
    codomain = enumerate_grassmannian(n, n - k, spec)
    return GrassmannMap(domain, codomain, tuple(codomain.index(annihilator(s)) for s in domain))

def _sorted_vectors(W: Subspace) -> np.ndarray:
    vectors = span_vectors(W.basis)
    return vectors[np.lexsort(vectors.T[::-1])]

def symplectic_basis(Omega: BilinearForm) -> SymplecticBasis:
    predicates = form_predicates(Omega)
    if not predicates.symplectic:
        raise NotSymplecticError()
    if not predicates.nonsingular:
        raise SingularFormError()
    spec = Omega.spec
    W = whole_space(spec, Omega.n)
    xs, ys = [], []
    while W.k > 0:
        vectors = _sorted_vectors(W)
        x = vectors[1:2]
        values = _pairing(Omega, x, vectors)[0]
        j = int(np.nonzero(values)[0][0])
        c = int(Omega.sigma2.inverse()(spec.inv[values[j]]))
        y = spec.mul[c, vectors[j]]
        xs.append(tuple(x[0].tolist()))
        ys.append(tuple(y.tolist()))
        pair = subspace_make([xs[-1], ys[-1]], Omega.n, spec)
        W = meet(W, orth_complement(Omega, pair))
    return SymplecticBasis(tuple(xs), tuple(ys))

def is_symplectic_basis(Omega: BilinearForm, basis: SymplecticBasis) -> bool:
    k = len(basis.xs)
    if len(basis.ys) != k or 2 * k != Omega.n:
        return False
    if subspace_make(basis.vectors(), Omega.n, Omega.spec).k != Omega.n:
        return False
    for i in range(k):
        for j in range(k):
            target = 1 if i == j else 0
            if form_eval(Omega, basis.xs[i], basis.xs[j]).code != 0:
                return False
            if form_eval(Omega, basis.ys[i], basis.ys[j]).code != 0:
                return False
            if form_eval(Omega, basis.xs[i], basis.ys[j]).code != target:
                return False
    return True

def restricted_gram(Omega: BilinearForm, s: Subspace) -> Matrix:
    B = s.basis.entries
    return Matrix(Omega.spec, _pairing(Omega, B, B))

def singular_restriction_set(Omega: BilinearForm, k: int) -> PlaneSet:
    predicates = form_predicates(Omega)
    if not predicates.symplectic:
        raise NotSymplecticError()
    if not predicates.nonsingular:
        raise SingularFormError()
    index = enumerate_grassmannian(Omega.n, k, Omega.spec)
    return PlaneSet.of(index, (i for i, s in enumerate(index) if rank(restricted_gram(Omega, s)) < k))
