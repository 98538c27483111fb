from functools import reduce
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from config import settings_limits
from core.exceptions import (BadDimensionsError, EqualDimensionError, NotIrregularError,
                             NotSupersetError, NotTransverseError, OutOfRangeError,
                             ShapeMismatchError, VerificationError)
from core.logger import get_logger
from models.field import FieldSpec, FieldAutomorphism
from models.grassmann import PlaneSet, Subspace
from models.irregularity import (DeficientSeed, IrregularityCharacteristics, SimilarityVerdict,
                                 SubStatus)
from models.maps import GrassmannMap, SemilinearMap
from models.matrix import Matrix
from models.regularity import CoordinateSystem
from service.forms import dot_form, form_map, orth_complement, standard_symplectic
from service.grassmann import (contains, distance_matrix, enumerate_grassmannian, incidence,
                               index_of, lines_of, meet, plane_lookup, span_lines, span_of_lines,
                               star_top, subspaces_of)
from service.linalg import batch_product, row_basis
from service.maps import iter_linear_group, line_table, map_compose
from service.regularity import binomial, coordinate_planes, is_regular
from utils import ordered_map

logger = get_logger('irregularity')

def _mr_search(spec: FieldSpec, n: int, k: int, allowed: frozenset[int],
               seed: tuple[int, ...] = ()) -> Iterator[tuple[int, ...]]:
    total = len(enumerate_grassmannian(n, 1, spec))
    stars = incidence(spec, n, k, 1)
    need = binomial(n - 1, k - 1)
    # каждая ось лежит ровно в C(n-1, k-1) координатных плоскостях
    candidates = [line for line in range(total) if len(stars[line] & allowed) >= need]

    def fits(chosen: list[int], line: int) -> bool:
        for S in combinations(chosen, k - 1):
            if span_of_lines(spec, n, frozenset(S) | {line})[1] not in allowed:
                return False
        return True

    def extend(chosen: list[int], span: frozenset[int], pos: int) -> Iterator[tuple[int, ...]]:
        if len(chosen) == n:
            yield tuple(sorted(chosen))
            return
        for ci in range(pos, len(candidates)):
            if len(candidates) - ci < n - len(chosen):
                break
            line = candidates[ci]
            if line in span or not fits(chosen, line):
                continue
            grown = chosen + [line]
            yield from extend(grown, span_lines(spec, n, frozenset(grown)), ci + 1)

    yield from extend(list(seed), span_lines(spec, n, frozenset(seed)), 0)

def _seeds(spec: FieldSpec, n: int, k: int, plane: int) -> Iterator[tuple[int, ...]]:
    for combo in combinations(sorted(lines_of(spec, n, k, plane)), k):
        if span_of_lines(spec, n, frozenset(combo))[0] == k:
            yield combo

def contains_maximal_regular(I: PlaneSet, through: int | None = None) -> CoordinateSystem | None:
    """Система координат, все координатные k-плоскости которой лежат в I (и, если задано, through)."""
    index = I.index
    spec, n, k = index.spec, index.n, index.k
    if len(I) + (through is not None) < binomial(n, k):
        return None
    if through is None:
        found = next(_mr_search(spec, n, k, I.members), None)
    else:
        allowed = I.members | {through}
        found = next((lines for seed in _seeds(spec, n, k, through)
                      for lines in _mr_search(spec, n, k, allowed, seed)), None)
    return None if found is None else CoordinateSystem(spec, n, found)

def is_irregular(I: PlaneSet) -> bool:
    return is_regular(I) is None and contains_maximal_regular(I) is None

def _blocked(I: PlaneSet, plane: int) -> CoordinateSystem | None:
    return contains_maximal_regular(I.union({plane}), through=plane)

def _maximal_given_irregular(I: PlaneSet) -> bool:
    outside = I.complement().indices
    return all(witness is not None for witness in ordered_map(lambda p: _blocked(I, p), outside))

def is_maximal_irregular(I: PlaneSet) -> bool:
    return is_irregular(I) and _maximal_given_irregular(I)

def complete_to_maximal_irregular(I: PlaneSet, order: Sequence[int] | None = None) -> PlaneSet:
    if not is_irregular(I):
        raise NotIrregularError()
    index = I.index
    sequence = list(order or [])
    listed = set(sequence)
    sequence += [p for p in range(len(index)) if p not in listed]

    current = set(I.members)
    witnesses: dict[int, CoordinateSystem] = {}
    for p in sequence:
        if p in current or p in witnesses:
            continue
        witness = contains_maximal_regular(PlaneSet.of(index, current | {p}), through=p)
        if witness is None:
            current.add(p)
        else:
            witnesses[p] = witness

    # отвергнутая плоскость остаётся отвергнутой: множество только растёт
    for p, C in witnesses.items():
        if not coordinate_planes(C, index.k).members - {p} <= current:
            raise VerificationError(f'Свидетель для плоскости {p} не лежит в пополнении!')
    logger.debug('Пополнение: %d -> %d плоскостей', len(I), len(current))
    return PlaneSet.of(index, current)

def _check_target(s: Subspace, k: int) -> None:
    if s.k < 1:
        raise OutOfRangeError('Подпространство s должно быть ненулевым!')
    if not 1 <= k <= s.n - 1:
        raise OutOfRangeError(f'Требуется 1 <= k <= n - 1, получено k = {k}!')

def x_set(s: Subspace, k: int) -> PlaneSet:
    """Плоскости, пересекающие s нетривиально."""
    _check_target(s, k)
    stars = incidence(s.spec, s.n, k, 1)
    planes = set()
    for line in lines_of(s.spec, s.n, s.k, index_of(s)):
        planes |= stars[line]
    return PlaneSet.of(enumerate_grassmannian(s.n, k, s.spec), planes)

def y_set(s: Subspace, k: int) -> PlaneSet:
    """Плоскости, лежащие вместе с s в общей гиперплоскости."""
    _check_target(s, k)
    n = s.n
    index = enumerate_grassmannian(n, k, s.spec)
    if s.k == n:
        return PlaneSet(index)
    hyperplanes = incidence(s.spec, n, n - 1, s.k)[index_of(s)]
    tops = incidence(s.spec, n, k, n - 1)
    return PlaneSet.of(index, (p for h in hyperplanes for p in tops[h]))

def characteristics(I: PlaneSet) -> IrregularityCharacteristics:
    index = I.index
    spec, n, k = index.spec, index.n, index.k
    stars = incidence(spec, n, k, 1)
    lines = tuple(t for t, star in enumerate(stars) if star <= I.members)
    s_1 = None
    if lines:
        dim, at = span_of_lines(spec, n, frozenset(lines))
        s_1 = enumerate_grassmannian(n, dim, spec)[at]

    tops = incidence(spec, n, k, n - 1)
    hyperplanes = tuple(h for h, top in enumerate(tops) if top <= I.members)
    s_hyper = None
    if hyperplanes:
        G = enumerate_grassmannian(n, n - 1, spec)
        s_hyper = reduce(meet, (G[h] for h in hyperplanes))
    return IrregularityCharacteristics(
        lines=lines,
        s_1=s_1,
        n_1=s_1.k if s_1 is not None else 0,
        hyperplanes=hyperplanes,
        s_hyper=s_hyper,
        n_hyper=s_hyper.k if s_hyper is not None else n,
    )

def _pivots(t: Subspace) -> list[int]:
    return [int(np.nonzero(row)[0][0]) for row in t.basis.entries]

def _sub_coordinates(l: Subspace, t: Subspace) -> np.ndarray:
    spec = t.spec
    P = _pivots(t)
    L = l.basis.entries
    if l.k < t.k:
        # базис t в RREF: координаты вектора из t - его значения в опорных столбцах
        return L[:, P]
    # фактор по t: зануляем опорные столбцы t и отбрасываем их
    reduced = spec.add[L, spec.neg[batch_product(spec, np.ascontiguousarray(L[:, P]), t.basis.entries)]]
    free = [c for c in range(t.n) if c not in P]
    return reduced[:, free]

def sub_grassmannian_image(I: PlaneSet, t: Subspace) -> PlaneSet:
    """Образ I ∩ G_k(t) при изоморфизме G_k(t) на меньшее многообразие Грассмана."""
    index = I.index
    k, m = index.k, t.k
    if m == k:
        raise EqualDimensionError(k)
    sub_n, sub_k = (m, k) if m > k else (index.n - m, k - m)
    target = enumerate_grassmannian(sub_n, sub_k, index.spec)
    members = I.intersection(star_top(t, k))
    images = []
    for l in members.planes():
        coords = row_basis(Matrix(index.spec, np.ascontiguousarray(_sub_coordinates(l, t))))
        images.append(target.index(Subspace(index.spec, sub_n, coords)))
    return PlaneSet.of(target, images)

def plane_set_status(J: PlaneSet) -> SubStatus:
    if contains_maximal_regular(J) is not None:
        return 'contains_maximal_regular'
    if is_regular(J) is not None:
        return 'regular'
    if _maximal_given_irregular(J):
        return 'maximal_irregular'
    return 'irregular'

def restricted_grassmannian_status(I: PlaneSet, t: Subspace) -> SubStatus:
    return plane_set_status(sub_grassmannian_image(I, t))

def _check_transverse(s: Subspace, t: Subspace) -> None:
    if meet(s, t).k:
        raise NotTransverseError()

def deficient_seed(s: Subspace, t: Subspace) -> DeficientSeed:
    spec, n = s.spec, s.n
    k = t.k - 1
    if not 1 < k < n - 1 or s.k != n - k - 1:
        raise BadDimensionsError(f'Нужны dim s = n - k - 1 и dim t = k + 1 при 1 < k < n - 1, '
                                 f'получено dim s = {s.k}, dim t = {t.k}!')
    _check_transverse(s, t)
    t_at = index_of(t)
    s_prime = enumerate_grassmannian(n, k + 2, spec)[min(incidence(spec, n, k + 2, k + 1)[t_at])]
    c = meet(s_prime, s)

    hyper = enumerate_grassmannian(n, k + 1, spec)
    t_prime = next(hyper[i] for i in sorted(subspaces_of(s_prime, k + 1))
                   if i != t_at and not contains(hyper[i], c))
    l = meet(t, t_prime)
    lines = enumerate_grassmannian(n, 1, spec)
    l_lines = lines_of(spec, n, k, index_of(l))
    p = lines[min(l_lines)]
    p_prime = lines[min(lines_of(spec, n, k + 1, index_of(t_prime)) - l_lines)]

    seed = (x_set(s, k)
            .union(star_top(t_prime, k).intersection(star_top(p_prime, k)))
            .union(star_top(t, k).intersection(star_top(p, k)).difference({index_of(l)})))
    return DeficientSeed(seed, s_prime, t_prime, l, p, p_prime)

def construct_deficient_maximal(s: Subspace, t: Subspace) -> PlaneSet:
    """Максимальное иррегулярное I ⊇ X_k(s) с n_1(I) = n - k - 1 и немаксимальным I ∩ G_k(t)."""
    built = deficient_seed(s, t)
    k, n = t.k - 1, s.n
    try:
        I = complete_to_maximal_irregular(built.seed)
    except NotIrregularError:
        raise VerificationError("Множество I' оказалось не иррегулярным!")
    if not x_set(s, k).issubset(I):
        raise VerificationError('Пополнение не содержит X_k(s)!')
    if characteristics(I).n_1 != n - k - 1:
        raise VerificationError(f'n_1(I) != {n - k - 1}!')
    if restricted_grassmannian_status(I, t) in ('contains_maximal_regular', 'maximal_irregular'):
        raise VerificationError('Ограничение на G_k(t) должно быть иррегулярным и немаксимальным!')
    logger.debug('Построено I из %d плоскостей, затравка %d', len(I), len(built.seed))
    return I

def construct_deficient_dual(s: Subspace, t: Subspace) -> PlaneSet:
    """Двойственная конструкция: I ⊇ Y_k(s) с n_{n-1}(I) = n - k + 1, k = dim t + 1."""
    spec, n = s.spec, s.n
    k = t.k + 1
    if s.k != n - k + 1 or not 1 < k < n - 1:
        raise BadDimensionsError(f'Нужны dim s = n - k + 1 и dim t = k - 1 при 1 < k < n - 1, '
                                 f'получено dim s = {s.k}, dim t = {t.k}!')
    _check_transverse(s, t)
    dot = dot_form(spec, n)
    J = construct_deficient_maximal(orth_complement(dot, s), orth_complement(dot, t))
    I = form_map(dot, k).preimage(J)
    if not y_set(s, k).issubset(I):
        raise VerificationError('Результат не содержит Y_k(s)!')
    if characteristics(I).n_hyper != n - k + 1:
        raise VerificationError(f'n_(n-1)(I) != {n - k + 1}!')
    return I

def extend_transverse(I: PlaneSet, t: Subspace, s: Subspace) -> PlaneSet:
    """Максимальное иррегулярное J с J ∩ G_k(t) = I для I, максимального в G_k(t)."""
    index = I.index
    n, k, m = index.n, index.k, t.k
    if m == k:
        raise EqualDimensionError(k)
    if s.k != n - m:
        raise BadDimensionsError(f'Нужна dim s = n - dim t = {n - m}, получено {s.k}!')
    _check_transverse(s, t)
    top = star_top(t, k)
    if not I.issubset(top):
        raise NotSupersetError('Множество должно лежать в G_k(t)!')
    if restricted_grassmannian_status(I, t) != 'maximal_irregular':
        raise NotIrregularError('Множество не является максимальным иррегулярным в G_k(t)!')

    if m > k:
        J = complete_to_maximal_irregular(x_set(s, k).union(I))
    else:
        dot = dot_form(index.spec, n)
        f = form_map(dot, k)
        dual = extend_transverse(f.image(I), orth_complement(dot, t), orth_complement(dot, s))
        J = f.preimage(dual)
    if J.intersection(top) != I:
        raise VerificationError('J ∩ G_k(t) не совпадает с I!')
    return J

def _fingerprint(I: PlaneSet) -> tuple | None:
    index = I.index
    if len(index) > settings_limits.PAIR_TEST_LIMIT:
        return None
    D = distance_matrix(index.spec, index.n, index.k)
    chosen = np.array(I.indices, dtype=np.int64)
    sub = D[np.ix_(chosen, chosen)]
    rows = sorted(tuple(np.bincount(row, minlength=index.k + 1).tolist()) for row in sub)
    return tuple(rows)

def _characteristic_key(I: PlaneSet) -> frozenset[tuple[int, int]] | tuple[int, int]:
    c = characteristics(I)
    n = I.index.n
    if 2 * I.index.k != n:
        return (c.n_1, c.n_hyper)
    # при n = 2k отображение формы меняет местами n_1 и n - n_(n-1)
    return frozenset({(c.n_1, c.n_hyper), (n - c.n_hyper, n - c.n_1)})

def _maps_into(lines: Sequence[int], planes: Iterable[int], target: frozenset[int],
               spec: FieldSpec, n: int, k: int) -> bool:
    plane_lines = incidence(spec, n, 1, k)
    lookup = plane_lookup(spec, n, k)
    for p in planes:
        if lookup.get(frozenset(lines[x] for x in plane_lines[p])) not in target:
            return False
    return True

def are_similar(I: PlaneSet, J: PlaneSet) -> SimilarityVerdict:
    if I.index != J.index:
        raise ShapeMismatchError('Множества лежат в разных многообразиях Грассмана!')
    index = I.index
    spec, n, k = index.spec, index.n, index.k
    if len(I) != len(J):
        return SimilarityVerdict('no', reason=f'размеры различаются: {len(I)} и {len(J)}')
    if _characteristic_key(I) != _characteristic_key(J):
        return SimilarityVerdict('no', reason='характеристики n_1, n_(n-1) различаются')
    if _fingerprint(I) != _fingerprint(J):
        return SimilarityVerdict('no', reason='распределения расстояний различаются')
    if spec.q > settings_limits.SIMILARITY_MAX_Q or n > settings_limits.SIMILARITY_MAX_N:
        return SimilarityVerdict('inconclusive', reason='фильтры пройдены, группа слишком велика для перебора')

    form: GrassmannMap | None = None
    sources = [I.indices]
    if 2 * k == n:
        form = form_map(standard_symplectic(spec, n), k)
        sources.append(form.image(I).indices)
    for j in range(spec.m):
        sigma = FieldAutomorphism(spec, j)
        for M in iter_linear_group(spec, n):
            h = SemilinearMap(spec, sigma, Matrix(spec, M))
            lines = line_table(h)
            for variant, planes in enumerate(sources):
                if _maps_into(lines, planes, J.members, spec, n, k):
                    table = [plane_lookup(spec, n, k)[frozenset(lines[x] for x in members)]
                             for members in incidence(spec, n, 1, k)]
                    witness = GrassmannMap(index, index, tuple(table))
                    if variant:
                        witness = map_compose(witness, form)
                    return SimilarityVerdict('yes', witness, reason='найдено регулярное преобразование')
    return SimilarityVerdict('no', reason='полный перебор группы регулярных преобразований')
