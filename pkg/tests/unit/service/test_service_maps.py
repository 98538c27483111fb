from itertools import permutations

import pytest
from core.exceptions import DomainMismatchError, NotBijectionError, NonIdentityAutomorphismError, OutOfRangeError, SingularMatrixError
from models.field import FieldAutomorphism
from models.maps import GrassmannMap, SemilinearMap
from models.matrix import Matrix
from service.forms import dot_form, form_map, standard_symplectic
from service.gf import field_make
from service.grassmann import enumerate_grassmannian
from service.linalg import rank
from service.maps import (apply_vector, compose, form_factorization, identity_map, identity_table,
                          induced_map, induces, inverse, iter_linear_group, line_table, map_compose,
                          map_invert, normal_form, pullback_form, random_semilinear, same_up_to_scalar,
                          semilinear, similarity_map, swap_table)
from service.reconstruction import is_independence_preserving

@pytest.mark.maps
def test_semilinear_singular(gf2):
    with pytest.raises(SingularMatrixError):
        semilinear(gf2, Matrix.from_rows(gf2, [[1, 1], [1, 1]]))

@pytest.mark.maps
def test_apply_vector(gf4):
    f = semilinear(gf4, Matrix.from_rows(gf4, [[0, 1], [1, 0]]), FieldAutomorphism(gf4, 1))

    # sigma(2, 1) = (3, 1), затем перестановка координат
    assert apply_vector(f, (2, 1)) == (1, 3)

@pytest.mark.maps
def test_identity_induced(gf2, g24):
    assert induced_map(identity_map(gf2, 4), 2) == identity_table(g24)

@pytest.mark.maps
@pytest.mark.parametrize('q, n, k', [(2, 4, 2), (4, 3, 1), (3, 3, 2), (9, 3, 1)])
def test_induced_compose(q, n, k, rng):
    spec = field_make(q)
    f, g = random_semilinear(spec, n, rng), random_semilinear(spec, n, rng)

    assert induced_map(compose(g, f), k) == map_compose(induced_map(g, k), induced_map(f, k))

@pytest.mark.maps
@pytest.mark.parametrize('q', [2, 4, 8, 9])
def test_inverse(q, rng):
    spec = field_make(q)
    f = random_semilinear(spec, 3, rng)

    assert compose(inverse(f), f).matrix == Matrix.identity(spec, 3)
    assert compose(inverse(f), f).sigma.is_identity
    assert map_compose(map_invert(induced_map(f, 1)), induced_map(f, 1)) == identity_table(enumerate_grassmannian(3, 1, spec))

@pytest.mark.maps
def test_scalar_multiples_induce_same(gf3, rng):
    f = random_semilinear(gf3, 3, rng)
    g = SemilinearMap(gf3, f.sigma, Matrix(gf3, gf3.mul[2, f.matrix.entries]))

    assert same_up_to_scalar(f, g)
    assert normal_form(f) == normal_form(g)
    assert induced_map(f, 1) == induced_map(g, 1)

@pytest.mark.maps
@pytest.mark.parametrize('q, n', [(2, 3), (4, 3), (3, 4)])
def test_line_table(q, n, rng):
    f = random_semilinear(field_make(q), n, rng)

    assert line_table(f) == induced_map(f, 1).table

@pytest.mark.maps
def test_induced_range(gf2):
    with pytest.raises(OutOfRangeError) as excinfo:
        induced_map(identity_map(gf2, 3), 4)

    assert excinfo.value.detail == 'k = 4 вне диапазона 0..3!'

@pytest.mark.maps
def test_map_compose_mismatch(gf2):
    lines = identity_table(enumerate_grassmannian(3, 1, gf2))
    planes = identity_table(enumerate_grassmannian(4, 2, gf2))

    with pytest.raises(DomainMismatchError):
        map_compose(lines, planes)

@pytest.mark.maps
def test_swap_table(g24):
    f = swap_table(g24, 0, 5)

    assert f(0) == 5 and f(5) == 0 and f(1) == 1
    assert map_compose(f, f) == identity_table(g24)

@pytest.mark.maps
def test_induces(gf2, rng):
    f = random_semilinear(gf2, 4, rng)

    assert induces(induced_map(f, 2), 1) == induced_map(f, 1)
    assert induces(induced_map(f, 2), 3) == induced_map(f, 3)

@pytest.mark.maps
def test_induces_swap(g24):
    assert induces(swap_table(g24, 0, 34), 1) is None

@pytest.mark.maps
def test_induces_range(g24):
    with pytest.raises(OutOfRangeError):
        induces(identity_table(g24), 2)

@pytest.mark.maps
def test_iter_linear_group(gf2, gf3):
    matrices = list(iter_linear_group(gf2, 3))

    assert len(matrices) == 168
    assert len({m.tobytes() for m in matrices}) == 168
    assert all(rank(Matrix(gf2, m)) == 3 for m in matrices)
    assert sum(1 for _ in iter_linear_group(gf3, 2)) == 48

@pytest.mark.maps
def test_pullback_requires_linear(gf4):
    f = semilinear(gf4, Matrix.identity(gf4, 2), FieldAutomorphism(gf4, 1))

    with pytest.raises(NonIdentityAutomorphismError):
        pullback_form(f, dot_form(gf4, 2))

@pytest.mark.maps
@pytest.mark.parametrize('q', [2, 3])
def test_similarity_map(q, rng):
    spec = field_make(q)
    target = standard_symplectic(spec, 4)
    A = random_semilinear(spec, 4, rng)
    linear = semilinear(spec, A.matrix)
    source = pullback_form(linear, target)

    f = similarity_map(target, source)

    assert pullback_form(f, target).gram == source.gram

@pytest.mark.maps
@pytest.mark.parametrize('Omega_of, k', [
    (lambda: dot_form(field_make(2), 4), 2),
    (lambda: standard_symplectic(field_make(3), 4), 1),
    (lambda: dot_form(field_make(4), 3, FieldAutomorphism(field_make(4), 1)), 1)
])
def test_form_factorization(Omega_of, k):
    Omega = Omega_of()

    assert form_factorization(Omega, k) == form_map(Omega, k)

@pytest.mark.maps
def test_grassmann_map_not_bijection(g24):
    with pytest.raises(NotBijectionError) as excinfo:
        GrassmannMap(g24, g24, (0,) * 35)

    assert excinfo.value.detail == 'Таблица отображения не является биекцией!'

@pytest.mark.maps
def test_induces_inverse(gf2, rng):
    f = induced_map(random_semilinear(gf2, 4, rng), 2)

    g = induces(f, 1)

    assert induces(map_invert(f), 1) == map_invert(g)

@pytest.mark.maps
@pytest.mark.slow
def test_induces_symmetric_and_independence(gf2):
    lines = enumerate_grassmannian(3, 1, gf2)
    inducing = 0
    for table in permutations(range(len(lines))):
        f = GrassmannMap(lines, lines, table)

        g = induces(f, 2)

        assert (g is not None) == is_independence_preserving(f)
        if g is not None:
            inducing += 1
            assert induces(g, 1) == f

    assert inducing == 168
