from dataclasses import dataclass
from functools import cached_property

from core.exceptions import NotBijectionError
from models.field import FieldSpec, FieldAutomorphism
from models.grassmann import GrassmannianIndex, PlaneSet
from models.matrix import Matrix

@dataclass(frozen=True)
class SemilinearMap:
    spec: FieldSpec
    sigma: FieldAutomorphism
    matrix: Matrix

    @property
    def n(self) -> int:
        return self.matrix.rows

@dataclass(frozen=True)
class GrassmannMap:
    domain: GrassmannianIndex
    codomain: GrassmannianIndex
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != len(self.domain) or len(self.domain) != len(self.codomain):
            raise NotBijectionError()
        if set(self.table) != set(range(len(self.codomain))):
            raise NotBijectionError()

    @cached_property
    def inverse_table(self) -> tuple[int, ...]:
        inverse = [0] * len(self.table)
        for i, j in enumerate(self.table):
            inverse[j] = i
        return tuple(inverse)

    def __call__(self, i: int) -> int:
        return self.table[i]

    def image(self, planes: PlaneSet) -> PlaneSet:
        return PlaneSet.of(self.codomain, (self.table[i] for i in planes))

    def preimage(self, planes: PlaneSet) -> PlaneSet:
        return PlaneSet.of(self.domain, (self.inverse_table[i] for i in planes))

    @property
    def is_transformation(self) -> bool:
        return self.domain == self.codomain
