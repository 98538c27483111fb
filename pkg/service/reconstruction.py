from math import prod, factorial

import numpy as np

from config import settings_limits
from core.exceptions import (AutomorphismMismatchError, DichotomyViolationError,
                             NotDistancePreservingError, NotIndependencePreservingError,
                             NotRegularTransformationError, NTooSmallError, OutOfRangeError,
                             TooLargeError, VerificationError)
from core.logger import get_logger
from models.field import FieldSpec
from models.grassmann import GrassmannianIndex, PlaneSet
from models.maps import GrassmannMap, SemilinearMap
from models.matrix import Matrix
from models.reconstruction import ClassificationResult
from service.forms import dot_form, form_map, standard_symplectic
from service.gf import match_automorphism
from service.grassmann import adjacency, distance_matrix, incidence, plane_lookup
from service.linalg import mat_inv, solve, transpose
from service.maps import (identity_map, induced_map, induces, line_table, map_compose, map_invert,
                          normal_form, semilinear)
from service.regularity import coordinate_planes, iter_associated_systems

logger = get_logger('reconstruction')

def _require_lines(f: GrassmannMap) -> None:
    if not f.is_transformation or f.domain.k != 1:
        raise OutOfRangeError('Ожидается преобразование G_1^n!')
    if f.domain.n < 3:
        raise NTooSmallError(f.domain.n)

def independence_witness(f: GrassmannMap) -> int | None:
    """Гиперплоскость, прямые которой f или f^-1 переводит не в прямые гиперплоскости."""
    _require_lines(f)
    spec, n = f.domain.spec, f.domain.n
    hyperplanes = incidence(spec, n, 1, n - 1)
    lookup = plane_lookup(spec, n, n - 1)
    for h, members in enumerate(hyperplanes):
        image = frozenset(f.table[x] for x in members)
        preimage = frozenset(f.inverse_table[x] for x in members)
        if image not in lookup or preimage not in lookup:
            return h
    return None

def is_independence_preserving(f: GrassmannMap) -> bool:
    return independence_witness(f) is None

def _line_index(lines: GrassmannianIndex, vector: np.ndarray) -> int:
    spec = lines.spec
    lead = vector[np.nonzero(vector)[0][0]]
    return lines.index_of_key(tuple(spec.mul[spec.inv[lead], vector].tolist()))

def _ratio(spec: FieldSpec, first: np.ndarray, other: np.ndarray, w: np.ndarray) -> int:
    # w = alpha * first + beta * other, результат beta / alpha
    A = Matrix(spec, np.ascontiguousarray(np.stack([first, other], axis=1)))
    solution = solve(A, w.tolist())
    if solution is None or 0 in solution:
        raise VerificationError('Образ прямой не лежит в плоскости образов базисных прямых!')
    alpha, beta = solution
    return int(spec.mul[beta, spec.inv[alpha]])

def ftpg_reconstruct(f: GrassmannMap) -> SemilinearMap:
    _require_lines(f)
    witness = independence_witness(f)
    if witness is not None:
        raise NotIndependencePreservingError(hyperplane=witness)
    spec, n = f.domain.spec, f.domain.n
    lines = f.domain

    def image(vector: np.ndarray) -> np.ndarray:
        return lines.patterns[f.table[_line_index(lines, vector)]][0]

    basis = np.eye(n, dtype=np.uint8)
    primed = [image(e) for e in basis]

    # шаг 1: масштабируем представителей по образам l(e_1 + e_i)
    ys = [primed[0]]
    for i in range(1, n):
        a = _ratio(spec, primed[0], primed[i], image(spec.add[basis[0], basis[i]]))
        ys.append(spec.mul[a, primed[i]])

    # шаг 2: sigma(a) по образам l(e_1 + a e_2)
    values = [0]
    for a in range(1, spec.q):
        vector = spec.add[basis[0], spec.mul[a, basis[1]]]
        values.append(_ratio(spec, ys[0], ys[1], image(vector)))

    # шаг 3: восстановленная функция обязана совпасть с одним из автоморфизмов Фробениуса
    sigma = match_automorphism(spec, values)
    if sigma is None:
        raise AutomorphismMismatchError()

    # шаг 4: столбцы матрицы - векторы y_i
    h = semilinear(spec, Matrix(spec, np.ascontiguousarray(np.stack(ys, axis=1))), sigma)

    # шаг 5: L_1(h) совпадает с f на каждой прямой
    if line_table(h) != f.table:
        raise VerificationError('Восстановленное отображение не индуцирует исходную таблицу!')
    logger.debug('FTPG: sigma = Frob^%d', sigma.j)
    return h

def adjacency_witness(f: GrassmannMap) -> tuple[int, int] | None:
    """Пара плоскостей, смежность которой меняется под действием f."""
    index = f.domain
    neighbours = adjacency(index.spec, index.n, index.k)
    forward, back = f.table, f.inverse_table
    for a, around in enumerate(neighbours):
        for b in sorted(around):
            if forward[b] not in neighbours[forward[a]]:
                return a, b
            if back[b] not in neighbours[back[a]]:
                return back[a], back[b]
    return None

def is_distance_preserving(f: GrassmannMap) -> bool:
    if not f.is_transformation:
        raise OutOfRangeError('Сохранение расстояний определено только для преобразований!')
    index = f.domain
    by_adjacency = adjacency_witness(f) is None
    try:
        D = distance_matrix(index.spec, index.n, index.k)
    except TooLargeError:
        return by_adjacency
    perm = np.array(f.table, dtype=np.int64)
    by_distance = bool(np.array_equal(D[np.ix_(perm, perm)], D))
    if by_adjacency != by_distance:
        raise VerificationError('Проверки смежности и полного расстояния расходятся!')
    return by_distance

def _stars_to_stars(f: GrassmannMap) -> bool:
    index = f.domain
    spec, n, k = index.spec, index.n, index.k
    stars = incidence(spec, n, k, k - 1)
    star_lookup = set(stars)
    top_lookup = set(incidence(spec, n, k, k + 1))
    to_stars = to_tops = 0
    for members in stars:
        image = frozenset(f.table[x] for x in members)
        if image in star_lookup:
            to_stars += 1
        elif image in top_lookup:
            to_tops += 1
    if to_stars == len(stars):
        return True
    if to_tops == len(stars):
        return False
    raise DichotomyViolationError(to_stars, len(stars))

def _descend(current: GrassmannMap) -> GrassmannMap:
    while current.domain.k > 1:
        lower = induces(current, current.domain.k - 1)
        if lower is None:
            raise VerificationError(f'Преобразование G_{current.domain.k} не индуцирует преобразование G_{current.domain.k - 1}!')
        current = lower
    return current

def chow_classify(f: GrassmannMap) -> ClassificationResult:
    index = f.domain
    spec, n, k = index.spec, index.n, index.k
    if not f.is_transformation or not 1 < k < n - 1:
        raise OutOfRangeError(f'Классификация по смежности требует 1 < k < n - 1, получено k = {k}, n = {n}!')
    pair = adjacency_witness(f)
    if pair is not None:
        raise NotDistancePreservingError(pair=pair)

    form = None
    current = f
    if not _stars_to_stars(f):
        if 2 * k != n:
            raise VerificationError('Звёзды переходят в верхушки при n != 2k!')
        form = standard_symplectic(spec, n)
        current = map_compose(form_map(form, k), f)
        logger.debug('Звёзды переходят в верхушки: предварительно применена симплектическая форма')

    h = normal_form(ftpg_reconstruct(_descend(current)))
    lifted = induced_map(h, k)
    if form is not None:
        lifted = map_compose(map_invert(form_map(form, k)), lifted)
    if lifted != f:
        raise VerificationError('Восстановленное отображение не воспроизводит таблицу!')
    return ClassificationResult('linear' if form is None else 'form_composed', h, form, verified=True)

def system_count(q: int, n: int) -> int:
    """Число систем координат: |GL_n(q)| / ((q - 1)^n n!)."""
    return prod(q ** n - q ** i for i in range(n)) // ((q - 1) ** n * factorial(n))

def maximal_regular_sets(index: GrassmannianIndex) -> set[frozenset[int]]:
    count = system_count(index.spec.q, index.n)
    if count > settings_limits.TRANSFORMATION_SYSTEMS:
        raise TooLargeError(f'{count} систем координат больше предела {settings_limits.TRANSFORMATION_SYSTEMS}!')
    return {coordinate_planes(C, index.k).members for C in iter_associated_systems(PlaneSet(index))}

def is_regular_transformation(f: GrassmannMap) -> bool:
    if not f.is_transformation:
        raise OutOfRangeError('Регулярность определена только для преобразований!')
    maximal = maximal_regular_sets(f.domain)
    for members in maximal:
        if frozenset(f.table[x] for x in members) not in maximal:
            return False
        if frozenset(f.inverse_table[x] for x in members) not in maximal:
            return False
    return True

def _hyperplane_classify(f: GrassmannMap) -> ClassificationResult:
    # сопряжение формой dot сводит G_(n-1) к G_1: L_(n-1)(sigma, M) <-> L_1(sigma, M^-T)
    index = f.domain
    spec, n = index.spec, index.n
    g = form_map(dot_form(spec, n), n - 1)
    conjugated = map_compose(g, map_compose(f, map_invert(g)))
    h_sharp = ftpg_reconstruct(conjugated)
    h = normal_form(semilinear(spec, mat_inv(transpose(h_sharp.matrix)), h_sharp.sigma))
    if induced_map(h, n - 1) != f:
        raise VerificationError('Восстановленное отображение не воспроизводит таблицу!')
    return ClassificationResult('linear', h, verified=True)

def regular_classify(f: GrassmannMap) -> ClassificationResult:
    index = f.domain
    n, k = index.n, index.k
    if not 1 <= k <= n - 1:
        raise OutOfRangeError(f'Требуется 1 <= k <= n - 1, получено k = {k}!')
    if not is_regular_transformation(f):
        raise NotRegularTransformationError()
    if k == 1:
        return ClassificationResult('linear', normal_form(ftpg_reconstruct(f)), verified=True)
    if k == n - 1:
        return _hyperplane_classify(f)
    return chow_classify(f)

def classify_transformation(f: GrassmannMap) -> ClassificationResult:
    """Классификация без исключений: для негеометрической таблицы возвращает свидетеля."""
    index = f.domain
    spec, n, k = index.spec, index.n, index.k
    if not f.is_transformation:
        return ClassificationResult('not_classifiable', reason='отображение между разными многообразиями Грассмана')
    if k in (0, n):
        return ClassificationResult('linear', identity_map(spec, n), verified=True)
    if n < 3:
        return ClassificationResult('not_classifiable', reason=f'при n = {n} классификация невозможна')
    try:
        if k == 1:
            witness = independence_witness(f)
            if witness is not None:
                return ClassificationResult('not_classifiable', witness=(witness,),
                                            reason='независимость прямых не сохраняется')
            return ClassificationResult('linear', normal_form(ftpg_reconstruct(f)), verified=True)
        if k == n - 1:
            g = form_map(dot_form(spec, n), n - 1)
            witness = independence_witness(map_compose(g, map_compose(f, map_invert(g))))
            if witness is not None:
                return ClassificationResult('not_classifiable', witness=(witness,),
                                            reason='двойственная таблица не сохраняет независимость прямых')
            return _hyperplane_classify(f)
        pair = adjacency_witness(f)
        if pair is not None:
            return ClassificationResult('not_classifiable', witness=pair, reason='смежность не сохраняется')
        return chow_classify(f)
    except (DichotomyViolationError, VerificationError, AutomorphismMismatchError) as e:
        return ClassificationResult('not_classifiable', reason=e.detail)
