from dataclasses import dataclass

from models.field import FieldSpec, FieldAutomorphism
from models.matrix import Matrix

@dataclass(frozen=True)
class BilinearForm:
    spec: FieldSpec
    n: int
    gram: Matrix
    sigma1: FieldAutomorphism
    sigma2: FieldAutomorphism

    def __post_init__(self):
        if self.gram.rows != self.n or self.gram.cols != self.n:
            raise ValueError('Матрица Грама должна быть n x n!')

@dataclass(frozen=True)
class FormPredicates:
    nonsingular: bool
    reflexive: bool
    symmetric: bool
    skew_symmetric: bool
    symplectic: bool
    hermitian: bool
    skew_hermitian: bool

@dataclass(frozen=True)
class ReflexiveClass:
    kind: str
    scalar: int | None = None

@dataclass(frozen=True)
class SymplecticBasis:
    xs: tuple[tuple[int, ...], ...]
    ys: tuple[tuple[int, ...], ...]

    def vectors(self) -> list[tuple[int, ...]]:
        return list(self.xs) + list(self.ys)
