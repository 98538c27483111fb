from itertools import product
from typing import Literal

import numpy as np

from core.exceptions import UnsupportedOrderError, DivisionByZeroError
from core.logger import get_logger
from models.field import FieldSpec, FieldElement, FieldAutomorphism
from repository.grassmann import Cache

logger = get_logger('gf')

# q -> (p, m, модуль: коэффициенты от младшего к старшему)
MODULI: dict[int, tuple[int, int, tuple[int, ...]]] = {
    2: (2, 1, (0, 1)),
    3: (3, 1, (0, 1)),
    5: (5, 1, (0, 1)),
    7: (7, 1, (0, 1)),
    11: (11, 1, (0, 1)),
    13: (13, 1, (0, 1)),
    4: (2, 2, (1, 1, 1)),
    8: (2, 3, (1, 1, 0, 1)),
    9: (3, 2, (1, 0, 1)),
    16: (2, 4, (1, 1, 0, 0, 1)),
}

def _digits(code: int, p: int, m: int) -> list[int]:
    return [(code // p ** i) % p for i in range(m)]

def _code(digits: list[int], p: int) -> int:
    return sum(d * p ** i for i, d in enumerate(digits))

def _poly_mod(poly: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    poly = [c % p for c in poly]
    deg_mod = len(modulus) - 1
    lead_inv = pow(modulus[-1], -1, p)
    for top in range(len(poly) - 1, deg_mod - 1, -1):
        coef = poly[top] * lead_inv % p
        if coef:
            shift = top - deg_mod
            for i, c in enumerate(modulus):
                poly[shift + i] = (poly[shift + i] - coef * c) % p
    poly = poly[:deg_mod] + [0] * max(0, deg_mod - len(poly))
    return poly

def is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    degree = len(modulus) - 1
    if degree <= 1:
        return True
    # пробное деление на все унитарные многочлены степени <= degree // 2
    for d in range(1, degree // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = tuple(low) + (1,)
            if not any(_poly_mod(list(modulus), divisor, p)):
                return False
    return True

def _build(q: int) -> FieldSpec:
    if q not in MODULI:
        raise UnsupportedOrderError(q)
    p, m, modulus = MODULI[q]
    if not is_irreducible(modulus, p):
        raise UnsupportedOrderError(q)

    add = np.zeros((q, q), dtype=np.uint8)
    mul = np.zeros((q, q), dtype=np.uint8)
    digits = [_digits(a, p, m) for a in range(q)]
    for a, b in product(range(q), repeat=2):
        da, db = digits[a], digits[b]
        add[a, b] = _code([(x + y) % p for x, y in zip(da, db)], p)
        raw = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                raw[i + j] += x * y
        mul[a, b] = _code(_poly_mod(raw, modulus, p) if m > 1 else [raw[0] % p], p)

    neg = np.array([int(np.nonzero(add[a] == 0)[0][0]) for a in range(q)], dtype=np.uint8)
    inv = np.zeros(q, dtype=np.uint8)
    for a in range(1, q):
        inv[a] = int(np.nonzero(mul[a] == 1)[0][0])

    frobenius = np.zeros((m, q), dtype=np.uint8)
    frobenius[0] = np.arange(q, dtype=np.uint8)
    for j in range(1, m):
        frobenius[j] = frobenius[j - 1]
        # x -> x^p, применённое j раз
        for _ in range(p - 1):
            frobenius[j] = mul[frobenius[j], frobenius[j - 1]]

    for table in (add, mul, neg, inv, frobenius):
        table.setflags(write=False)
    logger.debug('Построены таблицы GF(%d)', q)
    return FieldSpec(p=p, m=m, modulus=modulus, add=add, mul=mul, neg=neg, inv=inv, frobenius=frobenius)

def field_make(q: int) -> FieldSpec:
    if q not in MODULI:
        raise UnsupportedOrderError(q)
    return Cache.get_field(q, lambda: _build(q))

def field_arith(op: Literal['add', 'mul', 'neg', 'inv'], a: FieldElement, b: FieldElement | None = None) -> FieldElement:
    match op:
        case 'add':
            return a + b
        case 'mul':
            return a * b
        case 'neg':
            return -a
        case 'inv':
            if a.code == 0:
                raise DivisionByZeroError()
            return a.inverse()
    raise ValueError(f'Неизвестная операция: {op}')

def automorphisms(spec: FieldSpec) -> list[FieldAutomorphism]:
    return [FieldAutomorphism(spec, j) for j in range(spec.m)]

def apply_automorphism(sigma: FieldAutomorphism, a: FieldElement) -> FieldElement:
    sigma.spec.check(a.spec)
    return FieldElement(a.spec, int(sigma(a.code)))

def match_automorphism(spec: FieldSpec, values: list[int]) -> FieldAutomorphism | None:
    for sigma in automorphisms(spec):
        if sigma.table().tolist() == list(values):
            return sigma
    return None
