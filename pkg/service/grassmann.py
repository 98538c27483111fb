from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Literal, Sequence

import numpy as np

from config import settings_limits
from core.exceptions import (TooLargeError, AmbientMismatchError, DimMismatchError,
                             EqualDimensionError, OutOfRangeError)
from core.logger import get_logger
from models.field import FieldSpec
from models.grassmann import Subspace, GrassmannianIndex, PlaneSet
from models.matrix import Matrix
from repository.grassmann import Cache
from service.linalg import all_vectors, batch_product, kernel, row_basis, rank, vstack

logger = get_logger('grassmann')

def gaussian_binomial(q: int, n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    numerator = prod(q ** (n - i) - 1 for i in range(k))
    denominator = prod(q ** (i + 1) - 1 for i in range(k))
    return numerator // denominator

def _rref_patterns(spec: FieldSpec, n: int, k: int) -> np.ndarray:
    blocks = []
    for pivots in combinations(range(n), k):
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in pivots]
        values = all_vectors(spec, len(free))
        block = np.zeros((values.shape[0], k, n), dtype=np.uint8)
        for i, p in enumerate(pivots):
            block[:, i, p] = 1
        for column, (i, j) in enumerate(free):
            block[:, i, j] = values[:, column]
        blocks.append(block)
    patterns = np.concatenate(blocks) if blocks else np.zeros((1, 0, n), dtype=np.uint8)
    flat = patterns.reshape(patterns.shape[0], k * n)
    if k * n:
        patterns = patterns[np.lexsort(flat.T[::-1])]
    patterns.setflags(write=False)
    return patterns

def _build_index(spec: FieldSpec, n: int, k: int) -> GrassmannianIndex:
    patterns = _rref_patterns(spec, n, k)
    flat = patterns.reshape(patterns.shape[0], k * n).tolist()
    lookup = {tuple(row): i for i, row in enumerate(flat)}
    logger.debug('Перечислено G_%d^%d(GF(%d)): %d плоскостей', k, n, spec.q, len(lookup))
    return GrassmannianIndex(spec=spec, n=n, k=k, patterns=patterns, lookup=lookup)

def enumerate_grassmannian(n: int, k: int, spec: FieldSpec) -> GrassmannianIndex:
    if not 0 <= k <= n:
        raise OutOfRangeError(f'Требуется 0 <= k <= n, получено k = {k}, n = {n}!')
    if n > settings_limits.MAX_N:
        raise TooLargeError(f'n = {n} больше предела {settings_limits.MAX_N}!')
    count = gaussian_binomial(spec.q, n, k)
    if count > settings_limits.MAX_INDEX_SIZE:
        raise TooLargeError(f'|G_{k}^{n}(GF({spec.q}))| = {count} больше предела {settings_limits.MAX_INDEX_SIZE}!')
    return Cache.get_index((spec.q, n, k), lambda: _build_index(spec, n, k))

def _from_matrix(spec: FieldSpec, n: int, matrix: Matrix) -> Subspace:
    return Subspace(spec, n, row_basis(matrix))

def subspace_make(rows: Sequence[Sequence[int]], n: int, spec: FieldSpec) -> Subspace:
    return _from_matrix(spec, n, Matrix.from_rows(spec, rows, cols=n))

def whole_space(spec: FieldSpec, n: int) -> Subspace:
    return Subspace(spec, n, Matrix.identity(spec, n))

def origin(spec: FieldSpec, n: int) -> Subspace:
    return Subspace(spec, n, Matrix.zeros(spec, 0, n))

def index_of(s: Subspace) -> int:
    return enumerate_grassmannian(s.n, s.k, s.spec).index(s)

def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.n != b.n or a.spec != b.spec:
        raise AmbientMismatchError()

def join(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return _from_matrix(a.spec, a.n, vstack(a.spec, a.n, a.basis, b.basis))

def meet(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    constraints = vstack(a.spec, a.n, kernel(a.basis), kernel(b.basis))
    return Subspace(a.spec, a.n, kernel(constraints))

def contains(s: Subspace, t: Subspace) -> bool:
    _check_ambient(s, t)
    return t.k <= s.k and rank(vstack(s.spec, s.n, s.basis, t.basis)) == s.k

def distance(a: Subspace, b: Subspace) -> int:
    if a.k != b.k:
        raise DimMismatchError(a.k, b.k)
    return a.k - meet(a, b).k

def _extend(spec: FieldSpec, n: int, base: Matrix, candidates: Matrix) -> list[tuple[int, ...]]:
    chosen: list[tuple[int, ...]] = []
    current = base
    for row in candidates.to_rows():
        trial = vstack(spec, n, current, Matrix.from_rows(spec, [row], cols=n))
        if rank(trial) > current.rows:
            chosen.append(row)
            current = trial
    return chosen

def geodesic(a: Subspace, b: Subspace) -> list[Subspace]:
    i = distance(a, b)
    common = meet(a, b)
    from_a = _extend(a.spec, a.n, common.basis, a.basis)
    from_b = _extend(a.spec, a.n, common.basis, b.basis)
    # x_1..x_i из a, затем базис пересечения, затем x_{k+1}..x_{k+i} из b
    vectors = from_a + common.basis.to_rows() + from_b
    k = a.k
    return [subspace_make(vectors[j:j + k], a.n, a.spec) for j in range(i + 1)]

def subspaces_of(s: Subspace, m: int) -> list[int]:
    """Индексы в G_m^n всех m-мерных подпространств s."""
    patterns = enumerate_grassmannian(s.k, m, s.spec).patterns
    products = batch_product(s.spec, patterns, s.basis.entries)
    target = enumerate_grassmannian(s.n, m, s.spec)
    flat = products.reshape(products.shape[0], m * s.n).tolist()
    return [target.lookup[tuple(row)] for row in flat]

def incidence(spec: FieldSpec, n: int, k: int, m: int) -> tuple[frozenset[int], ...]:
    """Для каждой s из G_m^n множество G_k^n(s), заданное индексами G_k^n."""
    def build() -> tuple[frozenset[int], ...]:
        source = enumerate_grassmannian(n, m, spec)
        if m == k:
            return tuple(frozenset({i}) for i in range(len(source)))
        if m > k:
            return tuple(frozenset(subspaces_of(s, k)) for s in source)
        planes = enumerate_grassmannian(n, k, spec)
        acc: list[set[int]] = [set() for _ in range(len(source))]
        for j, plane in enumerate(planes):
            for u in subspaces_of(plane, m):
                acc[u].add(j)
        return tuple(frozenset(members) for members in acc)
    return Cache.remember(('incidence', spec.q, n, k, m), build)

def star_top(s: Subspace, k: int) -> PlaneSet:
    if s.k == k:
        raise EqualDimensionError(k)
    index = enumerate_grassmannian(s.n, k, s.spec)
    if s.k > k:
        return PlaneSet.of(index, subspaces_of(s, k))
    return PlaneSet.of(index, incidence(s.spec, s.n, k, s.k)[index_of(s)])

def lines_of(spec: FieldSpec, n: int, dim: int, i: int) -> frozenset[int]:
    if dim == 0:
        return frozenset()
    return incidence(spec, n, 1, dim)[i]

def span_of_lines(spec: FieldSpec, n: int, lines: frozenset[int]) -> tuple[int, int]:
    """(dim, индекс) соединения набора прямых."""
    def build() -> tuple[int, int]:
        index = enumerate_grassmannian(n, 1, spec)
        rows = [index.patterns[i][0].tolist() for i in sorted(lines)]
        span = subspace_make(rows, n, spec)
        return span.k, index_of(span)
    return Cache.remember(('span', spec.q, n, lines), build)

def span_lines(spec: FieldSpec, n: int, lines: frozenset[int]) -> frozenset[int]:
    if not lines:
        return frozenset()
    dim, i = span_of_lines(spec, n, lines)
    return lines_of(spec, n, dim, i)

def line_matrix(spec: FieldSpec, n: int, k: int) -> np.ndarray:
    """Матрица инцидентности плоскость x прямая для G_k^n."""
    def build() -> np.ndarray:
        lines = incidence(spec, n, 1, k)
        width = gaussian_binomial(spec.q, n, 1)
        matrix = np.zeros((len(lines), width), dtype=np.int32)
        for i, members in enumerate(lines):
            matrix[i, list(members)] = 1
        return matrix
    return Cache.remember(('line_matrix', spec.q, n, k), build)

def distance_matrix(spec: FieldSpec, n: int, k: int) -> np.ndarray:
    def build() -> np.ndarray:
        size = gaussian_binomial(spec.q, n, k)
        if size > settings_limits.PAIR_TEST_LIMIT:
            raise TooLargeError(f'Матрица расстояний {size}x{size} слишком велика!')
        if k == 0:
            return np.zeros((1, 1), dtype=np.int32)
        B = line_matrix(spec, n, k)
        common = B @ B.T
        dim_of = np.zeros(int(common.max()) + 1, dtype=np.int32)
        for d in range(k + 1):
            dim_of[(spec.q ** d - 1) // (spec.q - 1)] = d
        return k - dim_of[common]
    return Cache.remember(('distance', spec.q, n, k), build)

def adjacency(spec: FieldSpec, n: int, k: int) -> tuple[frozenset[int], ...]:
    def build() -> tuple[frozenset[int], ...]:
        size = len(enumerate_grassmannian(n, k, spec))
        neighbours: list[set[int]] = [set() for _ in range(size)]
        if 0 < k:
            for star in incidence(spec, n, k, k - 1):
                for a in star:
                    neighbours[a] |= star
        for a in range(size):
            neighbours[a].discard(a)
        return tuple(frozenset(x) for x in neighbours)
    return Cache.remember(('adjacency', spec.q, n, k), build)

@dataclass(frozen=True)
class AdjacentFamily:
    planes: PlaneSet
    kind: Literal['star', 'top', 'unclassified']
    carrier: Subspace | None

class CliqueReporter:
    def __init__(self):
        self.calls = 0
        self.cliques: list[tuple[int, ...]] = []

    def record(self, clique: list[int]) -> None:
        self.cliques.append(tuple(sorted(clique)))

def _bron_kerbosch(clique: list[int], candidates: set[int], excluded: set[int],
                   reporter: CliqueReporter, neighbours: Sequence[frozenset[int]]) -> None:
    reporter.calls += 1
    if not candidates and not excluded:
        reporter.record(clique)
        return
    # опорная вершина: максимум соседей среди кандидатов, при равенстве наименьший индекс
    pivot = min(candidates | excluded, key=lambda u: (-len(candidates & neighbours[u]), u))
    for v in sorted(candidates - neighbours[pivot]):
        _bron_kerbosch(clique + [v], candidates & neighbours[v], excluded & neighbours[v], reporter, neighbours)
        candidates.discard(v)
        excluded.add(v)

def maximal_adjacent_families(n: int, k: int, spec: FieldSpec) -> list[AdjacentFamily]:
    if not 1 < k < n - 1:
        raise OutOfRangeError(f'Семейства смежности определены при 1 < k < n - 1, получено k = {k}, n = {n}!')
    index = enumerate_grassmannian(n, k, spec)
    neighbours = adjacency(spec, n, k)
    reporter = CliqueReporter()
    _bron_kerbosch([], set(range(len(index))), set(), reporter, neighbours)
    logger.debug('Bron-Kerbosch: %d вызовов, %d клик', reporter.calls, len(reporter.cliques))

    families = []
    for clique in sorted(reporter.cliques):
        planes = PlaneSet(index, clique)
        a, b = index[clique[0]], index[clique[1]]
        center, carrier = meet(a, b), join(a, b)
        if star_top(center, k) == planes:
            families.append(AdjacentFamily(planes, 'star', center))
        elif star_top(carrier, k) == planes:
            families.append(AdjacentFamily(planes, 'top', carrier))
        else:
            families.append(AdjacentFamily(planes, 'unclassified', None))
    return families

def plane_lookup(spec: FieldSpec, n: int, k: int) -> dict[frozenset[int], int]:
    """Обратная таблица: множество прямых плоскости -> индекс в G_k^n."""
    return Cache.remember(('plane_lookup', spec.q, n, k),
                          lambda: {members: i for i, members in enumerate(incidence(spec, n, 1, k))})
