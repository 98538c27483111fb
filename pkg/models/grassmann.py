from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from core.exceptions import InvalidPlaneSetError
from models.field import FieldSpec
from models.matrix import Matrix

@dataclass(frozen=True, eq=False)
class Subspace:
    spec: FieldSpec
    n: int
    basis: Matrix

    @property
    def k(self) -> int:
        return self.basis.rows

    @cached_property
    def key(self) -> tuple[int, ...]:
        return tuple(self.basis.entries.ravel().tolist())

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Subspace)
                and self.spec == other.spec
                and self.n == other.n
                and self.k == other.k
                and self.key == other.key)

    def __hash__(self) -> int:
        return hash((self.spec, self.n, self.k, self.key))

    def __lt__(self, other: 'Subspace') -> bool:
        return (self.k, self.key) < (other.k, other.key)

    def __repr__(self) -> str:
        return f'Subspace(n={self.n}, k={self.k}, basis={self.basis.to_rows()})'

@dataclass(frozen=True, eq=False)
class GrassmannianIndex:
    spec: FieldSpec
    n: int
    k: int
    patterns: np.ndarray
    lookup: dict[tuple[int, ...], int] = field(repr=False)

    def __len__(self) -> int:
        return self.patterns.shape[0]

    def __getitem__(self, i: int) -> Subspace:
        return Subspace(self.spec, self.n, Matrix(self.spec, self.patterns[i]))

    def __iter__(self) -> Iterator[Subspace]:
        return (self[i] for i in range(len(self)))

    def index(self, subspace: Subspace) -> int:
        return self.lookup[subspace.key]

    def index_of_key(self, key: tuple[int, ...]) -> int:
        return self.lookup[key]

    @property
    def signature(self) -> tuple[int, int, int]:
        return (self.spec.q, self.n, self.k)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GrassmannianIndex) and self.signature == other.signature

    def __hash__(self) -> int:
        return hash(self.signature)

    def __repr__(self) -> str:
        return f'G_{self.k}^{self.n}(GF({self.spec.q}))'

@dataclass(frozen=True)
class PlaneSet:
    index: GrassmannianIndex
    indices: tuple[int, ...] = ()

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.indices, self.indices[1:])):
            raise InvalidPlaneSetError()
        if self.indices and (self.indices[0] < 0 or self.indices[-1] >= len(self.index)):
            raise InvalidPlaneSetError()

    @classmethod
    def of(cls, index: GrassmannianIndex, members: Iterable[int]) -> 'PlaneSet':
        return cls(index, tuple(sorted(set(int(i) for i in members))))

    @classmethod
    def full(cls, index: GrassmannianIndex) -> 'PlaneSet':
        return cls(index, tuple(range(len(index))))

    @cached_property
    def members(self) -> frozenset[int]:
        return frozenset(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __contains__(self, i: object) -> bool:
        return i in self.members

    def planes(self) -> list[Subspace]:
        return [self.index[i] for i in self.indices]

    def union(self, other: 'PlaneSet | Iterable[int]') -> 'PlaneSet':
        return PlaneSet.of(self.index, self.members | set(other))

    def intersection(self, other: 'PlaneSet | Iterable[int]') -> 'PlaneSet':
        return PlaneSet.of(self.index, self.members & set(other))

    def difference(self, other: 'PlaneSet | Iterable[int]') -> 'PlaneSet':
        return PlaneSet.of(self.index, self.members - set(other))

    def issubset(self, other: 'PlaneSet | Iterable[int]') -> bool:
        return self.members <= set(other)

    def complement(self) -> 'PlaneSet':
        return PlaneSet.of(self.index, set(range(len(self.index))) - self.members)
