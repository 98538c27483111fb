from dataclasses import dataclass
from typing import Literal

from models.grassmann import PlaneSet, Subspace
from models.maps import GrassmannMap

SubStatus = Literal['contains_maximal_regular', 'regular', 'maximal_irregular', 'irregular']

@dataclass(frozen=True)
class IrregularityCharacteristics:
    lines: tuple[int, ...]
    s_1: Subspace | None
    n_1: int
    hyperplanes: tuple[int, ...]
    s_hyper: Subspace | None
    n_hyper: int

@dataclass(frozen=True)
class DeficientSeed:
    """Множество I' до пополнения и все сделанные при построении выборы."""
    seed: PlaneSet
    s_prime: Subspace
    t_prime: Subspace
    l: Subspace
    p: Subspace
    p_prime: Subspace

@dataclass(frozen=True)
class SimilarityVerdict:
    kind: Literal['yes', 'no', 'inconclusive']
    witness: GrassmannMap | None = None
    reason: str = ''
