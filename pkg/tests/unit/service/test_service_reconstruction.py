import pytest
from core.exceptions import (NotDistancePreservingError, NotIndependencePreservingError, NotRegularTransformationError,
                             NTooSmallError, OutOfRangeError)
from models.maps import GrassmannMap
from service.forms import form_map, standard_symplectic
from service.gf import field_make
from service.grassmann import enumerate_grassmannian
from service.maps import (identity_table, induced_map, line_table, map_compose, map_invert, random_semilinear,
                          same_up_to_scalar, swap_table)
from service.reconstruction import (adjacency_witness, chow_classify, classify_transformation, ftpg_reconstruct,
                                    independence_witness, is_distance_preserving, is_independence_preserving,
                                    is_regular_transformation, regular_classify, system_count)

def line_map(h):
    lines = enumerate_grassmannian(h.n, 1, h.spec)
    return GrassmannMap(lines, lines, line_table(h))

@pytest.mark.reconstruction
@pytest.mark.slow
@pytest.mark.parametrize('q, n', [(2, 3), (3, 3), (4, 3), (4, 4), (8, 3), (9, 3)])
def test_ftpg_reconstruct(q, n, rng):
    spec = field_make(q)
    for _ in range(100):
        h = random_semilinear(spec, n, rng)

        g = ftpg_reconstruct(line_map(h))

        assert g.sigma == h.sigma
        assert same_up_to_scalar(g, h)

@pytest.mark.reconstruction
def test_ftpg_small_n(gf2):
    lines = enumerate_grassmannian(2, 1, gf2)

    with pytest.raises(NTooSmallError) as excinfo:
        ftpg_reconstruct(identity_table(lines))

    assert excinfo.value.detail == 'Требуется n >= 3, получено n = 2!'

@pytest.mark.reconstruction
def test_ftpg_requires_lines(g24):
    with pytest.raises(OutOfRangeError):
        ftpg_reconstruct(identity_table(g24))

@pytest.mark.reconstruction
def test_ftpg_not_collineation(gf2):
    f = swap_table(enumerate_grassmannian(3, 1, gf2), 0, 1)

    assert not is_independence_preserving(f)
    with pytest.raises(NotIndependencePreservingError) as excinfo:
        ftpg_reconstruct(f)

    assert excinfo.value.hyperplane == independence_witness(f)
    assert excinfo.value.detail.startswith('Преобразование не сохраняет независимость прямых!')

@pytest.mark.reconstruction
def test_distance_preserving(gf2, g24, rng):
    assert is_distance_preserving(induced_map(random_semilinear(gf2, 4, rng), 2))
    assert is_distance_preserving(form_map(standard_symplectic(gf2, 4), 2))
    assert not is_distance_preserving(swap_table(g24, 0, 34))

@pytest.mark.reconstruction
@pytest.mark.parametrize('q, n, count', [(2, 3, 28), (2, 4, 840), (3, 3, 234)])
def test_system_count(q, n, count):
    assert system_count(q, n) == count

@pytest.mark.reconstruction
@pytest.mark.parametrize('q, n, k', [(2, 4, 2), (3, 4, 2), (2, 5, 2), (4, 3, 1), (2, 3, 2), (3, 4, 3)])
def test_classify_linear(q, n, k, rng):
    h = random_semilinear(field_make(q), n, rng)
    f = induced_map(h, k)

    result = classify_transformation(f)

    assert result.variant == 'linear'
    assert result.verified
    assert induced_map(result.map, k) == f
    assert result.map.sigma == h.sigma

@pytest.mark.reconstruction
@pytest.mark.parametrize('q', [2, 3])
def test_classify_form_composed(q, rng):
    spec = field_make(q)
    h = random_semilinear(spec, 4, rng)
    F = form_map(standard_symplectic(spec, 4), 2)
    f = map_compose(map_invert(F), induced_map(h, 2))

    result = classify_transformation(f)

    assert result.variant == 'form_composed'
    assert result.verified
    assert map_compose(map_invert(form_map(result.form, 2)), induced_map(result.map, 2)) == f

@pytest.mark.reconstruction
def test_classify_swap(gf2, g24, span_axes):
    a, b = g24.index(span_axes(gf2, 4, 0, 1)), g24.index(span_axes(gf2, 4, 2, 3))
    f = swap_table(g24, a, b)

    result = classify_transformation(f)

    assert result.variant == 'not_classifiable'
    assert not result.verified
    assert result.witness == adjacency_witness(f)
    assert result.reason == 'смежность не сохраняется'

@pytest.mark.reconstruction
def test_classify_swap_lines(gf2):
    f = swap_table(enumerate_grassmannian(3, 1, gf2), 0, 1)

    result = classify_transformation(f)

    assert result.variant == 'not_classifiable'
    assert result.witness == (independence_witness(f),)

@pytest.mark.reconstruction
def test_classify_small_n(gf2):
    result = classify_transformation(identity_table(enumerate_grassmannian(2, 1, gf2)))

    assert result.variant == 'not_classifiable'
    assert result.reason == 'при n = 2 классификация невозможна'

@pytest.mark.reconstruction
def test_classify_trivial_k(gf2):
    result = classify_transformation(identity_table(enumerate_grassmannian(3, 0, gf2)))

    assert result.variant == 'linear'
    assert result.map.n == 3

@pytest.mark.reconstruction
def test_regular_transformation(gf2, g24, span_axes, rng):
    assert is_regular_transformation(induced_map(random_semilinear(gf2, 4, rng), 2))
    assert is_regular_transformation(form_map(standard_symplectic(gf2, 4), 2))

    a, b = g24.index(span_axes(gf2, 4, 0, 1)), g24.index(span_axes(gf2, 4, 2, 3))
    swap = swap_table(g24, a, b)

    assert not is_regular_transformation(swap)
    with pytest.raises(NotRegularTransformationError) as excinfo:
        regular_classify(swap)

    assert excinfo.value.detail == 'Преобразование не регулярно!'

@pytest.mark.reconstruction
@pytest.mark.parametrize('k', [1, 2, 3])
def test_regular_classify(gf2, k, rng):
    h = random_semilinear(gf2, 4, rng)
    f = induced_map(h, k)

    result = regular_classify(f)

    assert result.verified
    assert induced_map(result.map, k) == f

@pytest.mark.reconstruction
def test_chow_classify_form_composed(gf2, rng):
    F = form_map(standard_symplectic(gf2, 4), 2)
    f = map_compose(map_invert(F), induced_map(random_semilinear(gf2, 4, rng), 2))

    result = chow_classify(f)

    assert result.variant == 'form_composed'
    assert result.form == standard_symplectic(gf2, 4)

@pytest.mark.reconstruction
def test_chow_classify_not_adjacent(g24, gf2, span_axes):
    f = swap_table(g24, g24.index(span_axes(gf2, 4, 0, 1)), g24.index(span_axes(gf2, 4, 2, 3)))

    with pytest.raises(NotDistancePreservingError) as excinfo:
        chow_classify(f)

    assert excinfo.value.pair == adjacency_witness(f)
    assert excinfo.value.detail.startswith('Преобразование не сохраняет смежность!')

@pytest.mark.reconstruction
def test_chow_classify_range(gf2):
    with pytest.raises(OutOfRangeError) as excinfo:
        chow_classify(identity_table(enumerate_grassmannian(3, 1, gf2)))

    assert excinfo.value.detail == 'Классификация по смежности требует 1 < k < n - 1, получено k = 1, n = 3!'

@pytest.mark.reconstruction
@pytest.mark.slow
def test_classes_coincide(gf2, g24, span_axes, rng):
    F = map_invert(form_map(standard_symplectic(gf2, 4), 2))
    for _ in range(100):
        f = induced_map(random_semilinear(gf2, 4, rng), 2)
        for variant, sample in (('linear', f), ('form_composed', map_compose(F, f))):
            result = classify_transformation(sample)

            assert result.variant == variant
            assert result.verified
            assert is_distance_preserving(sample)
            assert is_regular_transformation(sample)

    swap = swap_table(g24, g24.index(span_axes(gf2, 4, 0, 1)), g24.index(span_axes(gf2, 4, 2, 3)))

    assert classify_transformation(swap).variant == 'not_classifiable'
    assert not is_distance_preserving(swap)
    assert not is_regular_transformation(swap)
