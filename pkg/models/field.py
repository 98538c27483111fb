from dataclasses import dataclass

import numpy as np

from core.exceptions import SpecMismatchError, DivisionByZeroError

@dataclass(frozen=True, eq=False)
class FieldSpec:
    p: int
    m: int
    modulus: tuple[int, ...]
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray
    frobenius: np.ndarray

    @property
    def q(self) -> int:
        return self.p ** self.m

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and (self.p, self.m) == (other.p, other.m)

    def __hash__(self) -> int:
        return hash((self.p, self.m))

    def __repr__(self) -> str:
        return f'GF({self.q})'

    def element(self, code: int) -> 'FieldElement':
        return FieldElement(self, int(code) % self.q)

    def check(self, other: 'FieldSpec') -> None:
        if self != other:
            raise SpecMismatchError(self.q, other.q)

@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    code: int

    def _peer(self, other: 'FieldElement') -> int:
        self.spec.check(other.spec)
        return other.code

    def __add__(self, other: 'FieldElement') -> 'FieldElement':
        return FieldElement(self.spec, int(self.spec.add[self.code, self._peer(other)]))

    def __sub__(self, other: 'FieldElement') -> 'FieldElement':
        return self + (-other)

    def __mul__(self, other: 'FieldElement') -> 'FieldElement':
        return FieldElement(self.spec, int(self.spec.mul[self.code, self._peer(other)]))

    def __neg__(self) -> 'FieldElement':
        return FieldElement(self.spec, int(self.spec.neg[self.code]))

    def inverse(self) -> 'FieldElement':
        if self.code == 0:
            raise DivisionByZeroError()
        return FieldElement(self.spec, int(self.spec.inv[self.code]))

    def __int__(self) -> int:
        return self.code

@dataclass(frozen=True)
class FieldAutomorphism:
    spec: FieldSpec
    j: int

    @property
    def is_identity(self) -> bool:
        return self.j == 0

    @property
    def is_involution(self) -> bool:
        return (2 * self.j) % self.spec.m == 0

    def table(self) -> np.ndarray:
        return self.spec.frobenius[self.j]

    def __call__(self, codes):
        # работает и для скаляров, и для массивов кодов
        return self.spec.frobenius[self.j][codes]

    def compose(self, other: 'FieldAutomorphism') -> 'FieldAutomorphism':
        self.spec.check(other.spec)
        return FieldAutomorphism(self.spec, (self.j + other.j) % self.spec.m)

    def inverse(self) -> 'FieldAutomorphism':
        return FieldAutomorphism(self.spec, (-self.j) % self.spec.m)
