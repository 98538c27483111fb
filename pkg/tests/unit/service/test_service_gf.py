import numpy as np
import pytest
from core.exceptions import DivisionByZeroError, SpecMismatchError, UnsupportedOrderError
from service.gf import (MODULI, apply_automorphism, automorphisms, field_arith, field_make,
                        is_irreducible, match_automorphism)

@pytest.mark.gf
@pytest.mark.parametrize('q, p, m', [
    (2, 2, 1),
    (4, 2, 2),
    (9, 3, 2),
    (16, 2, 4)
])
def test_field_make_order(q, p, m):
    spec = field_make(q)

    assert (spec.p, spec.m, spec.q) == (p, m, q)
    assert field_make(q) is spec

@pytest.mark.gf
@pytest.mark.parametrize('q', [1, 6, 10, 32])
def test_field_make_unsupported(q):
    with pytest.raises(UnsupportedOrderError) as excinfo:
        field_make(q)

    assert excinfo.value.detail == f'Поле порядка {q} не поддерживается! Допустимо: 2, 3, 4, 5, 7, 8, 9, 11, 13, 16'
    assert excinfo.value.exit_code == 2

@pytest.mark.gf
@pytest.mark.parametrize('q', sorted(MODULI))
def test_field_axioms(q):
    spec = field_make(q)
    a = np.arange(q)

    assert np.array_equal(spec.add, spec.add.T)
    assert np.array_equal(spec.mul, spec.mul.T)
    assert np.all(spec.add[a, spec.neg] == 0)
    assert np.all(spec.mul[a[1:], spec.inv[1:]] == 1)
    # дистрибутивность на всех тройках
    left = spec.mul[a[:, None, None], spec.add[a[None, :, None], a[None, None, :]]]
    right = spec.add[spec.mul[a[:, None, None], a[None, :, None]], spec.mul[a[:, None, None], a[None, None, :]]]
    assert np.array_equal(left, right)

@pytest.mark.gf
def test_gf4_tables(gf4):
    # x = 2, x^2 = x + 1 = 3
    assert gf4.mul[2, 2] == 3
    assert gf4.mul[2, 3] == 1
    assert gf4.add[2, 3] == 1

@pytest.mark.gf
def test_field_arith(gf3):
    two, one = gf3.element(2), gf3.element(1)

    assert field_arith('add', two, two).code == 1
    assert field_arith('mul', two, two).code == 1
    assert field_arith('neg', one).code == 2
    assert field_arith('inv', two).code == 2

@pytest.mark.gf
def test_field_arith_zero_inverse(gf4):
    with pytest.raises(DivisionByZeroError) as excinfo:
        field_arith('inv', gf4.element(0))

    assert excinfo.value.detail == 'Ноль не обратим!'

@pytest.mark.gf
def test_mixed_fields(gf2, gf3):
    with pytest.raises(SpecMismatchError) as excinfo:
        gf2.element(1) + gf3.element(1)

    assert excinfo.value.detail == 'Элементы из разных полей: GF(2) и GF(3)!'

@pytest.mark.gf
@pytest.mark.parametrize('modulus, p, expected', [
    ((1, 1, 1), 2, True),
    ((1, 0, 1), 2, False),
    ((1, 0, 1), 3, True),
    ((1, 1, 0, 1), 2, True),
    ((1, 1, 1, 1), 2, False)
])
def test_is_irreducible(modulus, p, expected):
    assert is_irreducible(modulus, p) is expected

@pytest.mark.gf
@pytest.mark.parametrize('q', [4, 8, 9, 16])
def test_automorphisms_are_homomorphisms(q):
    spec = field_make(q)
    a = np.arange(q)
    sigmas = automorphisms(spec)

    assert len(sigmas) == spec.m
    assert sigmas[0].is_identity
    for sigma in sigmas:
        table = sigma.table()
        assert sorted(table.tolist()) == list(range(q))
        assert np.array_equal(table[spec.mul[a[:, None], a[None, :]]], spec.mul[table[:, None], table[None, :]])
        assert np.array_equal(table[spec.add[a[:, None], a[None, :]]], spec.add[table[:, None], table[None, :]])

@pytest.mark.gf
def test_frobenius_gf4(gf4):
    sigma = automorphisms(gf4)[1]

    assert sigma.table().tolist() == [0, 1, 3, 2]
    assert sigma.is_involution
    assert apply_automorphism(sigma, gf4.element(2)).code == 3
    assert sigma.compose(sigma).is_identity

@pytest.mark.gf
def test_involution_depends_on_degree():
    assert automorphisms(field_make(9))[1].is_involution
    assert not automorphisms(field_make(8))[1].is_involution

@pytest.mark.gf
def test_match_automorphism(gf4):
    assert match_automorphism(gf4, [0, 1, 3, 2]).j == 1
    assert match_automorphism(gf4, [0, 1, 2, 3]).j == 0
    assert match_automorphism(gf4, [0, 1, 2, 2]) is None
