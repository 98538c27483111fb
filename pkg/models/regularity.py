from dataclasses import dataclass

from models.field import FieldSpec
from models.grassmann import PlaneSet, Subspace

@dataclass(frozen=True)
class CoordinateSystem:
    """Неупорядоченный набор n независимых прямых (индексы в G_1^n)."""
    spec: FieldSpec
    n: int
    lines: tuple[int, ...]

    def __post_init__(self):
        if len(self.lines) != self.n or list(self.lines) != sorted(set(self.lines)):
            raise ValueError('Система координат: нужно ровно n различных прямых в порядке возрастания!')

@dataclass(frozen=True)
class AxisRecord:
    line: int
    planes: PlaneSet
    meet: Subspace | None
    n_i: int

@dataclass(frozen=True)
class RegularityProfile:
    superset: PlaneSet
    axes: tuple[AxisRecord, ...]
    n_value: int

    @property
    def is_exact(self) -> bool:
        return self.n_value == len(self.axes)
