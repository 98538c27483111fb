from functools import reduce
from itertools import combinations, islice
from math import comb
from typing import Iterable, Iterator

from core.exceptions import (NotRegularError, NotSupersetError, NotAssociatedError, OutOfRangeError)
from core.logger import get_logger
from models.field import FieldSpec
from models.grassmann import PlaneSet, Subspace
from models.regularity import CoordinateSystem, AxisRecord, RegularityProfile
from repository.grassmann import Cache
from service.grassmann import (enumerate_grassmannian, gaussian_binomial, incidence, meet,
                               span_lines, span_of_lines, star_top, subspace_make)

logger = get_logger('regularity')

def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0

def threshold_size(n: int, k: int) -> int:
    """s_k^n: порог размера, начиная с которого степень неточности не больше 1."""
    return binomial(n - 1, k) + binomial(n - 2, k - 2)

def coordinate_system(spec: FieldSpec, n: int, lines: Iterable[int]) -> CoordinateSystem:
    chosen = frozenset(lines)
    if len(chosen) != n or span_of_lines(spec, n, chosen)[0] != n:
        raise OutOfRangeError('Прямые системы координат должны быть независимы и порождать всё пространство!')
    return CoordinateSystem(spec, n, tuple(sorted(chosen)))

def standard_system(spec: FieldSpec, n: int) -> CoordinateSystem:
    axes = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    index = enumerate_grassmannian(n, 1, spec)
    return coordinate_system(spec, n, (index.index(subspace_make([row], n, spec)) for row in axes))

def _planes_of(C: CoordinateSystem, m: int) -> tuple[int, ...]:
    # порядок: m-подмножества осей в лексикографическом порядке
    def build() -> tuple[int, ...]:
        return tuple(span_of_lines(C.spec, C.n, frozenset(axes))[1] for axes in combinations(C.lines, m))
    return Cache.remember(('coordinate_planes', C.spec.q, C.n, C.lines, m), build)

def coordinate_planes(C: CoordinateSystem, m: int) -> PlaneSet:
    if not 1 <= m <= C.n - 1:
        raise OutOfRangeError(f'Координатные плоскости определены при 1 <= m <= n - 1, получено m = {m}!')
    return PlaneSet.of(enumerate_grassmannian(C.n, m, C.spec), _planes_of(C, m))

def coordinate_incidence(C: CoordinateSystem, axes: Iterable[int], k: int) -> PlaneSet:
    """R(s) для координатной плоскости s, натянутой на оси axes (позиции в C.lines)."""
    chosen = frozenset(axes)
    if not chosen <= frozenset(range(C.n)):
        raise OutOfRangeError('Номер оси вне диапазона 0..n-1!')
    planes = []
    for T, plane in zip(combinations(range(C.n), k), _planes_of(C, k)):
        inside = set(T) <= chosen if len(chosen) >= k else chosen <= set(T)
        if inside:
            planes.append(plane)
    return PlaneSet.of(enumerate_grassmannian(C.n, k, C.spec), planes)

def hyperplane_pair_set(C: CoordinateSystem, i: int, j: int, k: int) -> PlaneSet:
    """R(s) ∪ R(s'), s - координатная гиперплоскость без оси i, s' - плоскость осей i, j."""
    if i == j:
        raise OutOfRangeError('Оси i и j должны различаться!')
    hyper = [a for a in range(C.n) if a != i]
    return coordinate_incidence(C, hyper, k).union(coordinate_incidence(C, (i, j), k))

def _search_systems(spec: FieldSpec, n: int, k: int, planes: Iterable[int]) -> Iterator[tuple[int, ...]]:
    plane_lines = incidence(spec, n, 1, k)
    targets = [plane_lines[p] for p in planes]
    total = gaussian_binomial(spec.q, n, 1)
    sizes = [(spec.q ** c - 1) // (spec.q - 1) for c in range(k + 1)]

    if len(targets) > binomial(n, k):
        return

    def feasible(chosen: frozenset[int], span: frozenset[int], start: int, slots: int) -> bool:
        for members in targets:
            inside = len(members & chosen)
            # пересечение координатных подпространств - координатное
            if len(members & span) != sizes[inside]:
                return False
            deficit = k - inside
            if deficit == 0:
                continue
            if deficit > slots:
                return False
            available = sum(1 for line in members if line >= start and line not in span)
            if available < deficit:
                return False
        return True

    def extend(chosen: list[int], span: frozenset[int], start: int) -> Iterator[tuple[int, ...]]:
        if len(chosen) == n:
            yield tuple(chosen)
            return
        slots = n - len(chosen) - 1
        for line in range(start, total - slots):
            if line in span:
                continue
            trial = chosen + [line]
            trial_set = frozenset(trial)
            trial_span = span_lines(spec, n, trial_set)
            if feasible(trial_set, trial_span, line + 1, slots):
                yield from extend(trial, trial_span, line + 1)

    yield from extend([], frozenset(), 0)

def iter_associated_systems(R: PlaneSet) -> Iterator[CoordinateSystem]:
    index = R.index
    for lines in _search_systems(index.spec, index.n, index.k, R.indices):
        yield CoordinateSystem(index.spec, index.n, lines)

def associated_systems(R: PlaneSet) -> list[CoordinateSystem]:
    systems = list(iter_associated_systems(R))
    logger.debug('Для множества из %d плоскостей найдено %d систем координат', len(R), len(systems))
    return systems

def is_regular(R: PlaneSet) -> CoordinateSystem | None:
    return next(iter_associated_systems(R), None)

def is_maximal_regular(R: PlaneSet) -> bool:
    return len(R) == binomial(R.index.n, R.index.k) and is_regular(R) is not None

def is_exact(R: PlaneSet) -> bool:
    first_two = list(islice(iter_associated_systems(R), 2))
    if not first_two:
        raise NotRegularError()
    return len(first_two) == 1

def degree(R: PlaneSet) -> tuple[int, PlaneSet]:
    systems = associated_systems(R)
    if not systems:
        raise NotRegularError()
    maximal = [frozenset(_planes_of(C, R.index.k)) for C in systems]
    if len(systems) == 1:
        return 0, R

    # точное надмножество имеет ровно одну систему, т.е. лежит ровно в одном максимальном
    for d in range(1, binomial(R.index.n, R.index.k) - len(R) + 1):
        witnesses = []
        seen: set[frozenset[int]] = set()
        for planes in maximal:
            extra = sorted(planes - R.members)
            for X in combinations(extra, d):
                union = R.members | frozenset(X)
                if union in seen:
                    continue
                seen.add(union)
                hits = 0
                for other in maximal:
                    if union <= other:
                        hits += 1
                        if hits > 1:
                            break
                if hits == 1:
                    witnesses.append(tuple(sorted(union)))
        if witnesses:
            return d, PlaneSet(R.index, min(witnesses))
    raise NotRegularError()

def restrict(R: PlaneSet, s: Subspace) -> PlaneSet:
    return R.intersection(star_top(s, R.index.k))

def hypergraph_view(R: PlaneSet, C: CoordinateSystem) -> list[tuple[int, ...]]:
    index = R.index
    plane_lines = incidence(index.spec, index.n, 1, index.k)
    edges = []
    for p in R:
        axes = tuple(i for i, line in enumerate(C.lines) if line in plane_lines[p])
        if len(axes) != index.k:
            raise NotAssociatedError()
        edges.append(axes)
    return edges

def profile(R_prime: PlaneSet, R: PlaneSet) -> RegularityProfile:
    if not R_prime.issubset(R):
        raise NotSupersetError()
    systems = list(islice(iter_associated_systems(R), 2))
    if len(R) != binomial(R.index.n, R.index.k) or len(systems) != 1:
        raise NotSupersetError('Второй аргумент должен быть максимальным регулярным множеством!')
    C = systems[0]
    index = R.index
    lines = enumerate_grassmannian(index.n, 1, index.spec)
    records = []
    for line in C.lines:
        R_i = restrict(R_prime, lines[line]) if index.k > 1 else R_prime.intersection({line})
        if len(R_i):
            s_i = reduce(meet, R_i.planes())
            records.append(AxisRecord(line, R_i, s_i, s_i.k))
        else:
            records.append(AxisRecord(line, R_i, None, 0))
    n_value = sum(1 for record in records if record.n_i == 1)
    return RegularityProfile(R, tuple(records), n_value)

def profile_values(R_prime: PlaneSet) -> list[int]:
    """n(R') для каждого максимального регулярного надмножества R'."""
    values = []
    for C in iter_associated_systems(R_prime):
        values.append(profile(R_prime, coordinate_planes(C, R_prime.index.k)).n_value)
    return values

def exact_hypergraphs(spec: FieldSpec, n: int, k: int) -> list[tuple[tuple[int, ...], ...]]:
    """Точные немаксимальные подмножества стандартной системы в виде гиперграфов на осях."""
    C = standard_system(spec, n)
    full = coordinate_planes(C, k)
    index = full.index
    found = []
    for size in range(1, len(full)):
        for subset in combinations(full.indices, size):
            R = PlaneSet(index, subset)
            if is_exact(R):
                found.append(tuple(hypergraph_view(R, C)))
    logger.info('G_%d^%d(GF(%d)): %d точных немаксимальных множеств', k, n, spec.q, len(found))
    return sorted(found)
