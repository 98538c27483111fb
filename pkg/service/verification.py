from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import comb, factorial, prod
from typing import Any, Callable, Iterable, Iterator

import numpy as np

from config import settings_limits
from core.exceptions import (BaseError, InfeasibleScopeError, NotIndependencePreservingError,
                             UnknownCheckError)
from core.logger import get_logger
from models.field import FieldAutomorphism, FieldSpec
from models.forms import BilinearForm
from models.grassmann import GrassmannianIndex, PlaneSet, Subspace
from models.maps import GrassmannMap
from models.matrix import Matrix
from repository.grassmann import Cache
from schemas.report import SCheckResult, SReport
from service.forms import (dot_form, form_eval, form_map, is_nonsingular, is_symplectic_basis,
                           singular_restriction_set, standard_symplectic, symplectic_basis)
from service.gf import MODULI, field_make
from service.grassmann import (enumerate_grassmannian, gaussian_binomial, incidence, index_of, lines_of,
                               maximal_adjacent_families, meet, star_top, subspace_make)
from service.irregularity import (are_similar, characteristics, complete_to_maximal_irregular,
                                  construct_deficient_dual, construct_deficient_maximal,
                                  contains_maximal_regular, deficient_seed, is_irregular,
                                  is_maximal_irregular, plane_set_status, restricted_grassmannian_status,
                                  sub_grassmannian_image, x_set, y_set)
from service.maps import induced_map, line_table, random_semilinear, same_up_to_scalar
from service.reconstruction import ftpg_reconstruct
from service.regularity import (associated_systems, binomial, coordinate_incidence, coordinate_planes,
                                degree, exact_hypergraphs, hyperplane_pair_set, is_exact,
                                profile_values, standard_system, threshold_size)
from utils import ordered_map, timed

logger = get_logger('verification')

RECONSTRUCTION_TRIALS = 100
DEGREE_SAMPLES = 20
POOL_COMPLETIONS = 20

@dataclass(frozen=True)
class Check:
    run: Callable[[FieldSpec, int, int], SCheckResult]
    envelope: str
    feasible: Callable[[int, int, int], bool]

REGISTRY: dict[str, Check] = {}

def register(name: str, envelope: str, feasible: Callable[[int, int, int], bool]):
    def decorator(func):
        REGISTRY[name] = Check(func, envelope, feasible)
        return func
    return decorator

def _result(name: str, scope: str, examined: int, failure: dict[str, Any] | None = None,
            **details) -> SCheckResult:
    if failure is not None:
        logger.warning('%s: контрпример %s', name, failure)
    return SCheckResult(check=name, passed=failure is None, scope=scope, examined=examined,
                        counterexample=failure, details=details)

def _rows(s: Subspace | None) -> list[list[int]] | None:
    return None if s is None else [list(row) for row in s.basis.to_rows()]

def _index_fits(q: int, n: int, k: int) -> bool:
    return 1 <= n <= settings_limits.MAX_N and gaussian_binomial(q, n, k) <= settings_limits.MAX_INDEX_SIZE

def _axes_span(spec: FieldSpec, n: int, axes: range) -> Subspace:
    return subspace_make([[1 if j == i else 0 for j in range(n)] for i in axes], n, spec)

def _subset_count(n: int, k: int, low: int) -> int:
    N = binomial(n, k)
    return sum(comb(N, j) for j in range(max(low, 1), N + 1))

def _standard_subsets(spec: FieldSpec, n: int, k: int, low: int) -> Iterator[PlaneSet]:
    full = coordinate_planes(standard_system(spec, n), k)
    for size in range(max(low, 1), len(full) + 1):
        for subset in combinations(full.indices, size):
            yield PlaneSet(full.index, subset)

def _middle(n: int, k: int) -> bool:
    return 1 < k < n - 1

# ---------- регулярные множества ----------

def _is_pair_shape(R: PlaneSet) -> bool:
    n, k = R.index.n, R.index.k
    return any(hyperplane_pair_set(C, i, j, k) == R
               for C in associated_systems(R) for i, j in permutations(range(n), 2))

def _is_incidence_shape(R: PlaneSet, dims: tuple[int, ...]) -> bool:
    n, k = R.index.n, R.index.k
    return any(coordinate_incidence(C, axes, k) == R
               for C in associated_systems(R) for m in dims for axes in combinations(range(n), m))

def _dense_feasible(q: int, n: int, k: int) -> bool:
    return (q <= 4 and _middle(n, k) and _index_fits(q, n, k)
            and _subset_count(n, k, threshold_size(n, k)) <= settings_limits.EXHAUSTIVE_SYSTEMS)

@register('dense-regular-degree',
          '1 < k < n - 1, q <= 4, не более 5000 подмножеств стандартной системы размера >= s_k^n',
          _dense_feasible)
def check_dense_regular_degree(spec: FieldSpec, n: int, k: int) -> SCheckResult:
    name = 'dense-regular-degree'
    s = threshold_size(n, k)
    scope = (f'все подмножества стандартной системы координат из >= {s} плоскостей; '
             'GL_n транзитивна на системах координат и сохраняет степень, перебор полный')
    examined = 0
    for R in _standard_subsets(spec, n, k, s):
        examined += 1
        d, witness = degree(R)
        shaped = _is_pair_shape(R)
        if d > 1 or (d == 1) != shaped or (len(R) > s and d != 0):
            return _result(name, scope, examined, {'planes': list(R.indices), 'degree': d,
                                                   'pair_shape': shaped, 'witness': list(witness.indices)})
    return _result(name, scope, examined, threshold=s)

def _large_threshold(n: int, k: int) -> tuple[int, tuple[int, ...]]:
    if n - k < k:
        return binomial(n - 1, k - 1), (1,)
    if k < n - k:
        return binomial(n - 1, k), (n - 1,)
    return binomial(n - 1, k), (1, n - 1)

def _large_feasible(q: int, n: int, k: int) -> bool:
    if q > 4 or not (k == 1 and n >= 2 or _middle(n, k)) or not _index_fits(q, n, k):
        return False
    low = 1 if k == 1 else _large_threshold(n, k)[0]
    return _subset_count(n, k, low) <= settings_limits.EXHAUSTIVE_SYSTEMS

@register('large-regular-degree',
          'k = 1 или 1 < k < n - 1, q <= 4, не более 5000 подмножеств стандартной системы',
          _large_feasible)
def check_large_regular_degree(spec: FieldSpec, n: int, k: int) -> SCheckResult:
    name = 'large-regular-degree'
    if k == 1:
        scope = 'все непустые подмножества стандартной системы прямых, deg(R) = n - |R|'
        examined = 0
        for R in _standard_subsets(spec, n, 1, 1):
            examined += 1
            d, _ = degree(R)
            if d != n - len(R):
                return _result(name, scope, examined, {'planes': list(R.indices), 'degree': d})
        return _result(name, scope, examined)

    c, dims = _large_threshold(n, k)
    scope = (f'все подмножества стандартной системы из >= {c} плоскостей; '
             f'deg = 2 ровно для R(s) при dim s из {list(dims)}')
    examined = 0
    for R in _standard_subsets(spec, n, k, c):
        examined += 1
        d, witness = degree(R)
        shaped = _is_incidence_shape(R, dims)
        if d > 2 or (d == 2) != shaped or (len(R) > c and d > 1):
            return _result(name, scope, examined, {'planes': list(R.indices), 'degree': d,
                                                   'incidence_shape': shaped, 'witness': list(witness.indices)})
    return _result(name, scope, examined, threshold=c, shape_dims=list(dims))

@register('adjacent-families', '1 < k < n - 1, |G_k^n| <= 400',
          lambda q, n, k: _middle(n, k) and n <= settings_limits.MAX_N and gaussian_binomial(q, n, k) <= 400)
def check_adjacent_families(spec: FieldSpec, n: int, k: int) -> SCheckResult:
    name = 'adjacent-families'
    scope = 'все максимальные клики графа смежности (Брон-Кербош)'
    families = maximal_adjacent_families(n, k, spec)
    stars = [f for f in families if f.kind == 'star']
    tops = [f for f in families if f.kind == 'top']
    expected = (gaussian_binomial(spec.q, n, k - 1), gaussian_binomial(spec.q, n, k + 1))
    for family in families:
        if family.kind == 'unclassified':
            return _result(name, scope, len(families), {'planes': list(family.planes.indices)})
        dim = k - 1 if family.kind == 'star' else k + 1
        if family.carrier.k != dim:
            return _result(name, scope, len(families), {'planes': list(family.planes.indices),
                                                        'carrier': _rows(family.carrier)})
    if (len(stars), len(tops)) != expected:
        return _result(name, scope, len(families), {'stars': len(stars), 'tops': len(tops),
                                                    'expected': list(expected)})
    return _result(name, scope, len(families), stars=len(stars), tops=len(tops))

@register('threshold-identity', '1 < k < n - 1, n <= MAX_N',
          lambda q, n, k: _middle(n, k) and n <= settings_limits.MAX_N)
def check_threshold_identity(spec: FieldSpec, n: int, k: int) -> SCheckResult:
    name = 'threshold-identity'
    scope = f'все 3 <= n <= {settings_limits.MAX_N}, 1 < k < n - 1 и все 0 < k1 <= k2 < k'
    examined = 0
    for N in range(3, settings_limits.MAX_N + 1):
        for K in range(2, N - 1):
            examined += 1
            if threshold_size(N, K) != binomial(N, K) - binomial(N - 2, K - 1):
                return _result(name, scope, examined, {'n': N, 'k': K, 's': threshold_size(N, K)})
            for k1 in range(1, K):
                for k2 in range(k1, K):
                    if binomial(N - k1, K - k1) < binomial(N - k2, K - k2):
                        return _result(name, scope, examined, {'n': N, 'k': K, 'k1': k1, 'k2': k2})
    return _result(name, scope, examined, s=threshold_size(n, k))

@register('profile-independence', 'q <= 3, 1 <= k <= n - 1, C(n, k) <= 6',
          lambda q, n, k: q <= 3 and 1 <= k <= n - 1 and binomial(n, k) <= 6 and _index_fits(q, n, k))
def check_profile_independence(spec: FieldSpec, n: int, k: int) -> SCheckResult:
    name = 'profile-independence'
    scope = 'все непустые подмножества стандартной системы и все их максимальные регулярные надмножества'
    examined = 0
    for R in _standard_subsets(spec, n, k, 1):
        examined += 1
        values = profile_values(R)
        if len(set(values)) != 1 or (values[0] == n) != is_exact(R):
            return _result(name, scope, examined, {'planes': list(R.indices), 'values': sorted(set(values))})
    return _result(name, scope, examined)

@register('exact-nonmaximal', 'q = 2, 1 < k < n - 1, C(n, k) <= 10',
          lambda q, n, k: q == 2 and _middle(n, k) and binomial(n, k) <= 10)
def check_exact_nonmaximal(spec: FieldSpec, n: int, k: int) -> SCheckResult:
    name = 'exact-nonmaximal'
    scope = 'все немаксимальные подмножества стандартной системы'
    found = exact_hypergraphs(spec, n, k)
    N, s = binomial(n, k), threshold_size(n, k)
    above = sum(1 for edges in found if len(edges) > s)
    expected = sum(comb(N, j) for j in range(s + 1, N))
    examined = 2 ** N - 2
    if above != expected:
        return _result(name, scope, examined, {'exact_above_threshold': above, 'expected': expected})
    smallest = min(found, key=len) if found else None
    return _result(name, scope, examined, exact=len(found),
                   smallest=[list(edge) for edge in smallest] if smallest else None)

def _degree_feasible(q: int, n: int, k: int) -> bool:
    return q == 2 and _middle(n, k) and n <= 4

@register('degree-invariance', 'q = 2, 1 < k < n - 1, n <= 4', _degree_feasible)
def check_degree_invariance(spec: FieldSpec, n: int, k: int) -> SCheckResult:
    name = 'degree-invariance'
    rng = np.random.default_rng(settings_limits.RANDOM_SEED)
    full = coordinate_planes(standard_system(spec, n), k)
    dual = form_map(dot_form(spec, n), k) if 2 * k == n else None
    scope = (f'{DEGREE_SAMPLES} случайных регулярных множеств (seed {settings_limits.RANDOM_SEED}) '
             'под случайным L_k(h)' + (' и F(dot)' if dual is not None else ''))
    for trial in range(DEGREE_SAMPLES):
        size = int(rng.integers(1, len(full) + 1))
        chosen = rng.choice(full.indices, size=size, replace=False).tolist()
        R = induced_map(random_semilinear(spec, n, rng), k).image(PlaneSet.of(full.index, chosen))
        d = degree(R)[0]
        images = {'induced': induced_map(random_semilinear(spec, n, rng), k).image(R)}
        if dual is not None:
            images['form'] = dual.image(R)
        for label, image in images.items():
            image_degree = degree(image)[0]
            if image_degree != d:
                return _result(name, scope, trial + 1, {'planes': list(R.indices), 'map': label,
                                                        'degree': d, 'image_degree': image_degree})
    return _result(name, scope, DEGREE_SAMPLES)

# ---------- иррегулярные множества ----------

@dataclass(frozen=True)
class PoolEntry:
    label: str
    planes: PlaneSet
    maximal: bool

def _deficient_x_planes(spec: FieldSpec, n: int, k: int) -> tuple[Subspace, Subspace]:
    return _axes_span(spec, n, range(k + 1, n)), _axes_span(spec, n, range(k + 1))

def _deficient_y_planes(spec: FieldSpec, n: int, k: int) -> tuple[Subspace, Subspace]:
    return _axes_span(spec, n, range(n - k + 1)), _axes_span(spec, n, range(n - k + 1, n))

def _random_irregular(index: GrassmannianIndex, rng: np.random.Generator, count: int) -> list[PlaneSet]:
    N = len(index)
    found: list[PlaneSet] = []
    attempts = 0
    while len(found) < count and attempts < 20 * count:
        attempts += 1
        size = int(rng.integers(1, N))
        I = PlaneSet.of(index, rng.choice(N, size=size, replace=False).tolist())
        if is_irregular(I):
            found.append(I)
    logger.debug('Случайные иррегулярные множества: %d из %d попыток', len(found), attempts)
    return found

def irregular_pool(spec: FieldSpec, n: int, k: int) -> tuple[PoolEntry, ...]:
    """X/Y-множества, обе дефицитные конструкции, случайные множества и их пополнения."""
    def build() -> tuple[PoolEntry, ...]:
        rng = np.random.default_rng(settings_limits.RANDOM_SEED)
        index = enumerate_grassmannian(n, k, spec)
        entries = []
        for m in range(1, n - k + 1):
            for s in enumerate_grassmannian(n, m, spec):
                entries.append(PoolEntry(f'X(s), dim s = {m}', x_set(s, k), m == n - k))
        for m in range(n - k + 1, n):
            for s in enumerate_grassmannian(n, m, spec):
                entries.append(PoolEntry(f'Y(s), dim s = {m}', y_set(s, k), False))
        entries.append(PoolEntry('дефицитная X-конструкция',
                                 construct_deficient_maximal(*_deficient_x_planes(spec, n, k)), True))
        entries.append(PoolEntry('дефицитная Y-конструкция',
                                 construct_deficient_dual(*_deficient_y_planes(spec, n, k)), True))
        samples = _random_irregular(index, rng, settings_limits.RANDOM_IRREGULAR_SAMPLES)
        entries += [PoolEntry(f'случайное #{i}', I, False) for i, I in enumerate(samples)]
        for i, I in enumerate(samples[:POOL_COMPLETIONS]):
            order = rng.permutation(len(index)).tolist()
            entries.append(PoolEntry(f'пополнение #{i}', complete_to_maximal_irregular(I, order), True))
        return tuple(entries)
    return Cache.remember(('irregular_pool', spec.q, n, k), build)

def _pool_feasible(q: int, n: int, k: int) -> bool:
    return q == 2 and _middle(n, k) and n <= 4

POOL_ENVELOPE = 'q = 2, 1 < k < n - 1, n <= 4'
POOL_SCOPE = ('все X/Y-множества, обе дефицитные конструкции, '
              f'{settings_limits.RANDOM_IRREGULAR_SAMPLES} случайных иррегулярных множеств '
              f'(seed {settings_limits.RANDOM_SEED}) и {POOL_COMPLETIONS} их пополнений')

def _entry(entry: PoolEntry, **extra) -> dict[str, Any]:
    return {'label': entry.label, 'planes': list(entry.planes.indices), **extra}

@register('x-y-statuses', POOL_ENVELOPE, _pool_feasible)
def check_x_y_statuses(spec: FieldSpec, n: int, k: int) -> SCheckResult:
    name = 'x-y-statuses'
    scope = 'все подпространства s размерностей 1..n-1'
    full = PlaneSet.full(enumerate_grassmannian(n, k, spec))
    irregular = ('irregular', 'maximal_irregular')
    examined = 0
    size = None
    for m in range(1, n):
        for s in enumerate_grassmannian(n, m, spec):
            examined += 1
            X, Y = x_set(s, k), y_set(s, k)
            x_status = 'full' if X == full else plane_set_status(X)
            y_status = 'full' if Y == full else plane_set_status(Y)
            statements = [
                ('X = G_k при m > n - k', m <= n - k or X == full),
                ('Y = G_k при m < n - k', m >= n - k or Y == full),
                ('X иррегулярно при m <= n - k', m > n - k or x_status in irregular),
                ('Y иррегулярно при m >= n - k', m < n - k or y_status in irregular),
                ('X максимально iff m = n - k', m > n - k or (x_status == 'maximal_irregular') == (m == n - k)),
                ('Y максимально iff m = n - k', m < n - k or (y_status == 'maximal_irregular') == (m == n - k)),
                ('X = Y при m = n - k', m != n - k or X == Y),
                ('X = G_k(s) при m = 1', m != 1 or m == k or X == star_top(s, k)),
                ('Y = G_k(s) при m = n - 1', m != n - 1 or m == k or Y == star_top(s, k)),
            ]
            broken = [label for label, ok in statements if not ok]
            if broken:
                return _result(name, scope, examined, {'s': _rows(s), 'statements': broken,
                                                       'x_status': x_status, 'y_status': y_status})
            if m == n - k:
                size = len(X)
    return _result(name, scope, examined, maximal_size=size)

@register('characteristic-bounds', POOL_ENVELOPE, _pool_feasible)
def check_characteristic_bounds(spec: FieldSpec, n: int, k: int) -> SCheckResult:
    name = 'characteristic-bounds'
    pool = irregular_pool(spec, n, k)
    for entry in pool:
        c = characteristics(entry.planes)
        if c.n_1 > n - k or c.n_hyper < n - k:
            return _result(name, POOL_SCOPE, len(pool), _entry(entry, n_1=c.n_1, n_hyper=c.n_hyper))
    return _result(name, POOL_SCOPE, len(pool))

def nonmaximal_inclusion_example(spec: FieldSpec, n: int, k: int) -> dict[str, Any]:
    """X(s) без плоскости l, 0 < dim(l ∩ s) < n - k: s_1 = s, но X(s_1) не лежит в множестве."""
    s = _axes_span(spec, n, range(n - k))
    X = x_set(s, k)
    planes = X.index
    for l in X:
        shared = meet(planes[l], s).k
        if 0 < shared < n - k:
            I = X.difference({l})
            c = characteristics(I)
            maximal = is_maximal_irregular(I)
            return {'plane': l, 'shared': shared, 'n_1': c.n_1, 'irregular': is_irregular(I),
                    'maximal': maximal,
                    'reproduced': c.s_1 == s and not X.issubset(I) and not maximal}
    return {'reproduced': False}

@register('maximal-inclusions', POOL_ENVELOPE, _pool_feasible)
def check_maximal_inclusions(spec: FieldSpec, n: int, k: int) -> SCheckResult:
    name = 'maximal-inclusions'
    pool = [entry for entry in irregular_pool(spec, n, k) if entry.maximal]
    scope = 'максимальные элементы пула: ' + POOL_SCOPE
    for entry in pool:
        I = entry.planes
        c = characteristics(I)
        if c.s_1 is not None and not x_set(c.s_1, k).issubset(I):
            return _result(name, scope, len(pool), _entry(entry, inclusion='X(s_1)'))
        if c.s_hyper is not None and c.s_hyper.k and not y_set(c.s_hyper, k).issubset(I):
            return _result(name, scope, len(pool), _entry(entry, inclusion='Y(s_(n-1))'))
        # при n_1 = n - k или n_(n-1) = n - k максимальное множество обязано быть X-множеством
        if c.n_1 == n - k and I != x_set(c.s_1, k):
            return _result(name, scope, len(pool), _entry(entry, equality='I = X(s_1)'))
        if c.n_hyper == n - k and I != x_set(c.s_hyper, k):
            return _result(name, scope, len(pool), _entry(entry, equality='I = X(s_(n-1))'))
    example = nonmaximal_inclusion_example(spec, n, k)
    if not example['reproduced']:
        return _result(name, scope, len(pool), {'nonmaximal_example': example})
    return _result(name, scope, len(pool), nonmaximal_example=example)

@register('characteristic-duality', POOL_ENVELOPE, _pool_feasible)
def check_characteristic_duality(spec: FieldSpec, n: int, k: int) -> SCheckResult:
    name = 'characteristic-duality'
    f = form_map(dot_form(spec, n), k)
    pool = irregular_pool(spec, n, k)
    for entry in pool:
        c = characteristics(entry.planes)
        d = characteristics(f.image(entry.planes))
        if d.n_1 != n - c.n_hyper or d.n_hyper != n - c.n_1:
            return _result(name, POOL_SCOPE, len(pool),
                           _entry(entry, n_1=c.n_1, n_hyper=c.n_hyper, image_n_1=d.n_1, image_n_hyper=d.n_hyper))
    return _result(name, POOL_SCOPE, len(pool))

def _nesting_violation(I: PlaneSet) -> dict[str, Any] | None:
    index = I.index
    spec, n, k = index.spec, index.n, index.k
    c = characteristics(I)
    lines, hyperplanes = set(c.lines), set(c.hyperplanes)
    # X(s1) ⊆ I <=> все прямые s1 в N_1; Y(s2) ⊆ I <=> все гиперплоскости над s2 в N_(n-1)
    lower = [(m, i, lines_of(spec, n, m, i))
             for m in range(1, n - k + 1)
             for i in range(gaussian_binomial(spec.q, n, m))
             if lines_of(spec, n, m, i) <= lines]
    upper = [(m, i, lines_of(spec, n, m, i))
             for m in range(n - k, n)
             for i, above in enumerate(incidence(spec, n, n - 1, m))
             if above <= hyperplanes]
    for m1, i1, own in lower:
        for m2, i2, other in upper:
            if not own <= other:
                return {'s1': [m1, i1], 's2': [m2, i2]}
    return None

@register('x-y-nesting', POOL_ENVELOPE, _pool_feasible)
def check_x_y_nesting(spec: FieldSpec, n: int, k: int) -> SCheckResult:
    name = 'x-y-nesting'
    pool = irregular_pool(spec, n, k)
    for entry, violation in zip(pool, ordered_map(lambda e: _nesting_violation(e.planes), pool)):
        if violation is not None:
            return _result(name, POOL_SCOPE, len(pool), _entry(entry, **violation))
    return _result(name, POOL_SCOPE, len(pool))

def _restriction_violation(I: PlaneSet) -> dict[str, Any] | None:
    index = I.index
    spec, n, k = index.spec, index.n, index.k
    c = characteristics(I)
    below = lines_of(spec, n, c.n_1, index_of(c.s_1)) if c.s_1 is not None else frozenset()
    above = lines_of(spec, n, c.n_hyper, index_of(c.s_hyper)) if c.s_hyper is not None else None
    for m in range(1, n):
        if m == k:
            continue
        G_m = enumerate_grassmannian(n, m, spec)
        G_t = enumerate_grassmannian(n, n - m, spec)
        for i in range(len(G_m)):
            own = lines_of(spec, n, m, i)
            # m < k: s ⊆ s_1(I); m > k: s_(n-1)(I) ⊆ s
            applies = own <= below if m < k else above is not None and above <= own
            if not applies:
                continue
            for j in range(len(G_t)):
                if own & lines_of(spec, n, n - m, j):
                    continue
                if contains_maximal_regular(sub_grassmannian_image(I, G_t[j])) is not None:
                    return {'s': _rows(G_m[i]), 't': _rows(G_t[j])}
    return None

@register('transverse-restriction', POOL_ENVELOPE, _pool_feasible)
def check_transverse_restriction(spec: FieldSpec, n: int, k: int) -> SCheckResult:
    name = 'transverse-restriction'
    pool = irregular_pool(spec, n, k)
    for entry, violation in zip(pool, ordered_map(lambda e: _restriction_violation(e.planes), pool)):
        if violation is not None:
            return _result(name, POOL_SCOPE, len(pool), _entry(entry, **violation))
    return _result(name, POOL_SCOPE, len(pool))

def _construction_feasible(q: int, n: int, k: int) -> bool:
    return q == 2 and _middle(n, k) and n <= 5

CONSTRUCTION_SCOPE = 's, t - координатные плоскости стандартной системы; построенное I проверяется полностью'
NOT_MAXIMAL_IN_SUB = ('contains_maximal_regular', 'maximal_irregular')

@register('deficient-x-construction', 'q = 2, 1 < k < n - 1, n <= 5', _construction_feasible)
def check_deficient_x_construction(spec: FieldSpec, n: int, k: int) -> SCheckResult:
    name = 'deficient-x-construction'
    s, t = _deficient_x_planes(spec, n, k)
    try:
        I = construct_deficient_maximal(s, t)
    except BaseError as e:
        return _result(name, CONSTRUCTION_SCOPE, 1, {'s': _rows(s), 't': _rows(t), 'error': e.detail})
    facts = {
        'maximal_irregular': is_maximal_irregular(I),
        'contains_x': x_set(s, k).issubset(I),
        'n_1': characteristics(I).n_1,
        'restricted_status': restricted_grassmannian_status(I, t),
    }
    ok = (facts['maximal_irregular'] and facts['contains_x'] and facts['n_1'] == n - k - 1
          and facts['restricted_status'] not in NOT_MAXIMAL_IN_SUB)
    if not ok:
        return _result(name, CONSTRUCTION_SCOPE, 1, {'planes': list(I.indices), **facts})
    return _result(name, CONSTRUCTION_SCOPE, 1, size=len(I), seed_size=len(deficient_seed(s, t).seed), **facts)

@register('deficient-y-construction', 'q = 2, 1 < k < n - 1, n <= 5', _construction_feasible)
def check_deficient_y_construction(spec: FieldSpec, n: int, k: int) -> SCheckResult:
    name = 'deficient-y-construction'
    s, t = _deficient_y_planes(spec, n, k)
    try:
        I = construct_deficient_dual(s, t)
    except BaseError as e:
        return _result(name, CONSTRUCTION_SCOPE, 1, {'s': _rows(s), 't': _rows(t), 'error': e.detail})
    facts = {
        'maximal_irregular': is_maximal_irregular(I),
        'contains_y': y_set(s, k).issubset(I),
        'n_hyper': characteristics(I).n_hyper,
        'restricted_status': restricted_grassmannian_status(I, t),
    }
    ok = (facts['maximal_irregular'] and facts['contains_y'] and facts['n_hyper'] == n - k + 1
          and facts['restricted_status'] not in NOT_MAXIMAL_IN_SUB)
    if not ok:
        return _result(name, CONSTRUCTION_SCOPE, 1, {'planes': list(I.indices), **facts})
    return _result(name, CONSTRUCTION_SCOPE, 1, size=len(I), **facts)

@register('non-similar-triple', 'q = 2, 1 < k < n - 1, n <= 5', _construction_feasible)
def check_non_similar_triple(spec: FieldSpec, n: int, k: int) -> SCheckResult:
    name = 'non-similar-triple'
    scope = 'X(s) при dim s = n - k и обе дефицитные конструкции, попарно'
    triple = {
        'X': x_set(_axes_span(spec, n, range(n - k)), k),
        'deficient_x': construct_deficient_maximal(*_deficient_x_planes(spec, n, k)),
        'deficient_y': construct_deficient_dual(*_deficient_y_planes(spec, n, k)),
    }
    records = {label: characteristics(I) for label, I in triple.items()}
    numbers = {label: [c.n_1, c.n_hyper] for label, c in records.items()}
    expected = (records['X'].n_1 == n - k and records['X'].n_hyper == n - k
                and records['deficient_x'].n_1 == n - k - 1
                and records['deficient_y'].n_hyper == n - k + 1)
    if not expected:
        return _result(name, scope, 3, {'characteristics': numbers})

    verdicts = {}
    for a, b in combinations(triple, 2):
        verdict = are_similar(triple[a], triple[b])
        verdicts[f'{a}~{b}'] = {'kind': verdict.kind, 'reason': verdict.reason}
        # при n = 2k дефицитные конструкции двойственны друг другу: вердикт только фиксируется
        if verdict.kind != 'no' and not (2 * k == n and {a, b} == {'deficient_x', 'deficient_y'}):
            return _result(name, scope, 3, {'pair': [a, b], 'verdict': verdict.kind,
                                            'characteristics': numbers})
    return _result(name, scope, 3, characteristics=numbers, verdicts=verdicts)

# ---------- формы и реконструкция ----------

def _alternating(spec: FieldSpec, n: int, values: Iterable[int]) -> BilinearForm:
    gram = np.zeros((n, n), dtype=np.uint8)
    for (i, j), a in zip(combinations(range(n), 2), values):
        gram[i, j] = a
        gram[j, i] = spec.neg[a]
    identity = FieldAutomorphism(spec, 0)
    return BilinearForm(spec, n, Matrix(spec, gram), identity, identity)

def _gram_in_basis(Omega: BilinearForm, vectors: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    return [tuple(form_eval(Omega, x, y).code for y in vectors) for x in vectors]

@register('symplectic-basis', '2 <= n <= MAX_N',
          lambda q, n, k: 2 <= n <= settings_limits.MAX_N)
def check_symplectic_basis(spec: FieldSpec, n: int, k: int) -> SCheckResult:
    name = 'symplectic-basis'
    rng = np.random.default_rng(settings_limits.RANDOM_SEED)
    pairs = n * (n - 1) // 2
    samples = settings_limits.SYMPLECTIC_SAMPLES

    if n % 2:
        exhaustive = spec.q ** pairs <= settings_limits.PAIR_TEST_LIMIT
        if exhaustive:
            scope = f'все {spec.q ** pairs} кососимметричных матриц Грама с нулевой диагональю'
            grams = product(range(spec.q), repeat=pairs)
        else:
            scope = f'{samples} случайных кососимметричных матриц Грама (seed {settings_limits.RANDOM_SEED})'
            grams = (rng.integers(spec.q, size=pairs).tolist() for _ in range(samples))
        examined = 0
        for values in grams:
            examined += 1
            Omega = _alternating(spec, n, values)
            if is_nonsingular(Omega):
                return _result(name, scope, examined, {'gram': Omega.gram.to_rows()})
        return _result(name, scope, examined, exhaustive=exhaustive)

    scope = f'{samples} случайных невырожденных симплектических матриц Грама (seed {settings_limits.RANDOM_SEED})'
    target = standard_symplectic(spec, n).gram.to_rows()
    examined = attempts = 0
    while examined < samples and attempts < 50 * samples:
        attempts += 1
        Omega = _alternating(spec, n, rng.integers(spec.q, size=pairs).tolist())
        if not is_nonsingular(Omega):
            continue
        examined += 1
        basis = symplectic_basis(Omega)
        if not is_symplectic_basis(Omega, basis) or _gram_in_basis(Omega, basis.vectors()) != target:
            return _result(name, scope, examined, {'gram': Omega.gram.to_rows(),
                                                   'basis': [list(v) for v in basis.vectors()]})
    return _result(name, scope, examined, attempts=attempts)

def _singular_feasible(q: int, n: int, k: int) -> bool:
    if n % 2 or not 1 <= k <= n - 1 or not _index_fits(q, n, k):
        return False
    return k % 2 == 1 or (q == 2 and n <= 4)

@register('singular-restriction-set', 'n чётно, 1 <= k <= n - 1; при чётном k только q = 2, n <= 4',
          _singular_feasible)
def check_singular_restriction_set(spec: FieldSpec, n: int, k: int) -> SCheckResult:
    name = 'singular-restriction-set'
    S = singular_restriction_set(standard_symplectic(spec, n), k)
    full = PlaneSet.full(S.index)
    if k % 2:
        scope = 'нечётное k: S_k^n(Omega) совпадает с G_k^n'
        if S != full:
            return _result(name, scope, len(full), {'missing': list(full.difference(S).indices)})
        return _result(name, scope, len(full), size=len(S))

    scope = 'чётное k: S_k^n(Omega) иррегулярно и не максимально'
    irregular = is_irregular(S)
    maximal = irregular and is_maximal_irregular(S)
    if not irregular or maximal:
        return _result(name, scope, 1, {'planes': list(S.indices), 'irregular': irregular, 'maximal': maximal})
    return _result(name, scope, 1, size=len(S))

def collineation_count(q: int, n: int) -> int:
    """|PΓL_n(q)| = |GL_n(q)| / (q - 1) * m."""
    return prod(q ** n - q ** i for i in range(n)) // (q - 1) * MODULI[q][1]

@register('projective-reconstruction', 'k = 1, 3 <= n <= MAX_N; полный перебор при q = 2, n = 3',
          lambda q, n, k: k == 1 and 3 <= n and _index_fits(q, n, 1))
def check_projective_reconstruction(spec: FieldSpec, n: int, k: int) -> SCheckResult:
    name = 'projective-reconstruction'
    lines = enumerate_grassmannian(n, 1, spec)
    if (spec.q, n) == (2, 3):
        scope = f'все {factorial(len(lines))} перестановок прямых'
        preserving = examined = 0
        for table in permutations(range(len(lines))):
            examined += 1
            try:
                ftpg_reconstruct(GrassmannMap(lines, lines, table))
            except NotIndependencePreservingError:
                continue
            except BaseError as e:
                return _result(name, scope, examined, {'table': list(table), 'error': e.detail})
            preserving += 1
        expected = collineation_count(spec.q, n)
        if preserving != expected:
            return _result(name, scope, examined, {'preserving': preserving, 'expected': expected})
        return _result(name, scope, examined, preserving=preserving)

    scope = f'{RECONSTRUCTION_TRIALS} случайных полулинейных отображений (seed {settings_limits.RANDOM_SEED})'
    rng = np.random.default_rng(settings_limits.RANDOM_SEED)
    for trial in range(RECONSTRUCTION_TRIALS):
        h = random_semilinear(spec, n, rng)
        table = line_table(h)
        try:
            g = ftpg_reconstruct(GrassmannMap(lines, lines, table))
        except BaseError as e:
            return _result(name, scope, trial + 1, {'table': list(table), 'error': e.detail})
        if g.sigma != h.sigma or not same_up_to_scalar(g, h):
            return _result(name, scope, trial + 1, {'table': list(table), 'sigma': h.sigma.j,
                                                    'recovered_sigma': g.sigma.j})
    return _result(name, scope, RECONSTRUCTION_TRIALS)

# ---------- сервис ----------

class VerificationService:
    def __init__(self, registry: dict[str, Check]):
        self.registry = registry

    def checks(self) -> list[str]:
        return sorted(self.registry)

    def _feasible(self, name: str, q: int, n: int, k: int) -> Check:
        if name not in self.registry:
            raise UnknownCheckError(name)
        check = self.registry[name]
        if not check.feasible(q, n, k):
            raise InfeasibleScopeError(name, check.envelope)
        return check

    @timed
    def verify(self, name: str, q: int, n: int, k: int) -> SReport:
        spec = field_make(q)
        check = self._feasible(name, q, n, k)
        logger.info('Проверка %s при q = %d, n = %d, k = %d', name, q, n, k)
        result = check.run(spec, n, k)
        return SReport(command='verify',
                       parameters={'check': name, 'q': q, 'n': n, 'k': k},
                       verdicts={name: result.passed},
                       certificates={name: result.model_dump()})

    @timed
    def verify_all(self, q: int, n: int, k: int) -> SReport:
        spec = field_make(q)
        names = [name for name in self.checks() if self.registry[name].feasible(q, n, k)]
        skipped = [name for name in self.checks() if name not in names]
        results = ordered_map(lambda name: self.registry[name].run(spec, n, k), names)
        return SReport(command='verify',
                       parameters={'check': 'all', 'q': q, 'n': n, 'k': k, 'skipped': skipped},
                       verdicts={r.check: r.passed for r in results},
                       certificates={r.check: r.model_dump() for r in results})

def get_verification_service() -> VerificationService:
    return VerificationService(REGISTRY)
