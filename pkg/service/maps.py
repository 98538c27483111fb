from typing import Iterable, Iterator, Sequence

import numpy as np

from core.exceptions import (DomainMismatchError, NonIdentityAutomorphismError,
                             SingularMatrixError, OutOfRangeError)
from models.field import FieldSpec, FieldAutomorphism
from models.forms import BilinearForm
from models.grassmann import GrassmannianIndex
from models.maps import SemilinearMap, GrassmannMap
from models.matrix import Matrix
from repository.grassmann import Cache
from service.forms import symplectic_basis, annihilator_map
from service.grassmann import enumerate_grassmannian, incidence, plane_lookup
from service.linalg import (all_vectors, apply_sigma, batch_product, mat_inv, mat_mul, rank, row_basis,
                            scale, span_vectors, transpose)

def semilinear(spec: FieldSpec, matrix: Matrix, sigma: FieldAutomorphism | None = None) -> SemilinearMap:
    if matrix.rows != matrix.cols or rank(matrix) != matrix.rows:
        raise SingularMatrixError()
    return SemilinearMap(spec, sigma or FieldAutomorphism(spec, 0), matrix)

def identity_map(spec: FieldSpec, n: int) -> SemilinearMap:
    return semilinear(spec, Matrix.identity(spec, n))

def random_semilinear(spec: FieldSpec, n: int, rng: np.random.Generator) -> SemilinearMap:
    sigma = FieldAutomorphism(spec, int(rng.integers(spec.m)))
    while True:
        entries = rng.integers(spec.q, size=(n, n)).astype(np.uint8)
        matrix = Matrix(spec, entries)
        if rank(matrix) == n:
            return SemilinearMap(spec, sigma, matrix)

def apply_vector(f: SemilinearMap, v) -> tuple[int, ...]:
    column = np.asarray(f.sigma(np.array(v, dtype=np.uint8))).reshape(-1, 1)
    return tuple(batch_product(f.spec, f.matrix.entries, column)[:, 0].tolist())

def image_rows(f: SemilinearMap, rows: np.ndarray) -> np.ndarray:
    # v -> M * sigma(v): строки переходят в sigma(B) * M^t
    return batch_product(f.spec, f.sigma(rows), np.ascontiguousarray(f.matrix.entries.T))

def compose(g: SemilinearMap, f: SemilinearMap) -> SemilinearMap:
    matrix = mat_mul(g.matrix, apply_sigma(g.sigma, f.matrix))
    return SemilinearMap(f.spec, g.sigma.compose(f.sigma), matrix)

def inverse(f: SemilinearMap) -> SemilinearMap:
    back = f.sigma.inverse()
    return SemilinearMap(f.spec, back, apply_sigma(back, mat_inv(f.matrix)))

def normal_form(f: SemilinearMap) -> SemilinearMap:
    flat = f.matrix.entries.ravel()
    lead = int(flat[np.nonzero(flat)[0][0]])
    return SemilinearMap(f.spec, f.sigma, scale(f.matrix, int(f.spec.inv[lead])))

def same_up_to_scalar(f: SemilinearMap, g: SemilinearMap) -> bool:
    return normal_form(f) == normal_form(g)

def induced_map(f: SemilinearMap, k: int) -> GrassmannMap:
    n = f.n
    if not 0 <= k <= n:
        raise OutOfRangeError(f'k = {k} вне диапазона 0..{n}!')
    index = enumerate_grassmannian(n, k, f.spec)
    table = []
    for s in index:
        image = row_basis(Matrix(f.spec, image_rows(f, s.basis.entries)))
        table.append(index.index_of_key(tuple(image.entries.ravel().tolist())))
    return GrassmannMap(index, index, tuple(table))

def identity_table(index: GrassmannianIndex) -> GrassmannMap:
    return GrassmannMap(index, index, tuple(range(len(index))))

def map_compose(g: GrassmannMap, f: GrassmannMap) -> GrassmannMap:
    if f.codomain != g.domain:
        raise DomainMismatchError()
    return GrassmannMap(f.domain, g.codomain, tuple(g.table[i] for i in f.table))

def map_invert(f: GrassmannMap) -> GrassmannMap:
    return GrassmannMap(f.codomain, f.domain, f.inverse_table)

def swap_table(index: GrassmannianIndex, a: int, b: int) -> GrassmannMap:
    table = list(range(len(index)))
    table[a], table[b] = b, a
    return GrassmannMap(index, index, tuple(table))

def pullback_form(f: SemilinearMap, Omega: BilinearForm) -> BilinearForm:
    if not f.sigma.is_identity:
        raise NonIdentityAutomorphismError()
    left = transpose(apply_sigma(Omega.sigma1, f.matrix))
    right = apply_sigma(Omega.sigma2, f.matrix)
    gram = mat_mul(mat_mul(left, Omega.gram), right)
    return BilinearForm(Omega.spec, Omega.n, gram, Omega.sigma1, Omega.sigma2)

def similarity_map(target: BilinearForm, source: BilinearForm) -> SemilinearMap:
    """Линейное f, переводящее Omega-базу source в Omega-базу target: f*(target) = source."""
    spec = target.spec
    to_basis = symplectic_basis(target)
    from_basis = symplectic_basis(source)
    B_target = transpose(Matrix.from_rows(spec, to_basis.vectors()))
    B_source = transpose(Matrix.from_rows(spec, from_basis.vectors()))
    return semilinear(spec, mat_mul(B_target, mat_inv(B_source)))

def form_factorization(Omega: BilinearForm, k: int) -> GrassmannMap:
    # F(Omega) = Phi * L(Omega_1), при sigma2 != Id ещё обратный автоморфизм по координатам
    spec, n = Omega.spec, Omega.n
    omega_1 = SemilinearMap(spec, Omega.sigma1, transpose(Omega.gram))
    composite = map_compose(annihilator_map(spec, n, k), induced_map(omega_1, k))
    if not Omega.sigma2.is_identity:
        back = SemilinearMap(spec, Omega.sigma2.inverse(), Matrix.identity(spec, n))
        composite = map_compose(induced_map(back, n - k), composite)
    return composite

def _incidence_lookup(spec: FieldSpec, n: int, k: int, m: int) -> dict[frozenset[int], int]:
    return {members: s for s, members in enumerate(incidence(spec, n, k, m))}

def induces(f: GrassmannMap, m: int) -> GrassmannMap | None:
    domain = f.domain
    spec, n, k = domain.spec, domain.n, domain.k
    if m == k or not f.is_transformation or not 0 < m < n:
        raise OutOfRangeError(f'Индуцирование определено для 0 < m < n, m != k, получено m = {m}!')
    sets = incidence(spec, n, k, m)
    lookup = _incidence_lookup(spec, n, k, m)
    # прообразы тоже обязаны быть множествами инцидентности
    forward = []
    for members in sets:
        image = frozenset(f.table[i] for i in members)
        preimage = frozenset(f.inverse_table[i] for i in members)
        if image not in lookup or preimage not in lookup:
            return None
        forward.append(lookup[image])
    target = enumerate_grassmannian(n, m, spec)
    if len(set(forward)) != len(target):
        return None
    return GrassmannMap(target, target, tuple(forward))

def _line_codes(spec: FieldSpec, n: int) -> tuple[np.ndarray, np.ndarray]:
    def build() -> tuple[np.ndarray, np.ndarray]:
        weights = spec.q ** np.arange(n - 1, -1, -1, dtype=np.int64)
        vectors = enumerate_grassmannian(n, 1, spec).patterns[:, 0, :]
        code_to_index = np.full(spec.q ** n, -1, dtype=np.int64)
        code_to_index[vectors.astype(np.int64) @ weights] = np.arange(vectors.shape[0])
        return weights, code_to_index
    return Cache.remember(('line_codes', spec.q, n), build)

def line_table(f: SemilinearMap) -> tuple[int, ...]:
    """Таблица L_1(f) без построения RREF для каждой прямой."""
    spec, n = f.spec, f.n
    weights, code_to_index = _line_codes(spec, n)
    images = image_rows(f, enumerate_grassmannian(n, 1, spec).patterns[:, 0, :])
    lead_at = np.argmax(images != 0, axis=1)
    lead = images[np.arange(images.shape[0]), lead_at]
    normal = spec.mul[spec.inv[lead][:, None], images]
    return tuple(code_to_index[normal.astype(np.int64) @ weights].tolist())

def lift_line_table(spec: FieldSpec, n: int, k: int, lines: Sequence[int],
                    planes: Iterable[int] | None = None) -> list[int] | None:
    """Образы плоскостей по таблице прямых; None, если образ набора прямых не плоскость."""
    plane_lines = incidence(spec, n, 1, k)
    lookup = plane_lookup(spec, n, k)
    images = []
    for p in (range(len(plane_lines)) if planes is None else planes):
        image = lookup.get(frozenset(lines[x] for x in plane_lines[p]))
        if image is None:
            return None
        images.append(image)
    return images

def iter_linear_group(spec: FieldSpec, n: int) -> Iterator[np.ndarray]:
    """Все невырожденные n x n матрицы: строки по очереди вне линейной оболочки предыдущих."""
    weights = spec.q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    vectors = all_vectors(spec, n)[1:]

    def extend(rows: list[np.ndarray]) -> Iterator[np.ndarray]:
        if len(rows) == n:
            yield np.array(rows, dtype=np.uint8)
            return
        span = set()
        if rows:
            span = set((span_vectors(Matrix(spec, np.array(rows, dtype=np.uint8))).astype(np.int64) @ weights).tolist())
        for v in vectors:
            if int(v.astype(np.int64) @ weights) not in span:
                yield from extend(rows + [v])

    yield from extend([])
