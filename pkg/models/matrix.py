from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from models.field import FieldSpec

@dataclass(frozen=True, eq=False)
class Matrix:
    spec: FieldSpec
    entries: np.ndarray

    def __post_init__(self):
        if self.entries.ndim != 2:
            raise ValueError('Матрица должна быть двумерной!')
        self.entries.setflags(write=False)

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows: Iterable[Sequence[int]], cols: int | None = None) -> 'Matrix':
        data = [list(row) for row in rows]
        if not data:
            return cls.zeros(spec, 0, cols or 0)
        array = np.array(data, dtype=np.int64) % spec.q
        return cls(spec, array.astype(np.uint8))

    @classmethod
    def zeros(cls, spec: FieldSpec, rows: int, cols: int) -> 'Matrix':
        return cls(spec, np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> 'Matrix':
        return cls(spec, np.eye(n, dtype=np.uint8))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(self.entries[i].tolist())

    def to_rows(self) -> list[tuple[int, ...]]:
        return [tuple(row) for row in self.entries.tolist()]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Matrix)
                and self.spec == other.spec
                and self.entries.shape == other.entries.shape
                and bool(np.array_equal(self.entries, other.entries)))

    def __hash__(self) -> int:
        return hash((self.spec, self.entries.shape, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f'Matrix({self.spec!r}, {self.to_rows()})'
