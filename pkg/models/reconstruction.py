from dataclasses import dataclass
from typing import Literal

from models.forms import BilinearForm
from models.maps import SemilinearMap

@dataclass(frozen=True)
class ClassificationResult:
    """linear: f = L_k(map); form_composed: f = F_k(form)^-1 * L_k(map)."""
    variant: Literal['linear', 'form_composed', 'not_classifiable']
    map: SemilinearMap | None = None
    form: BilinearForm | None = None
    witness: tuple[int, ...] | None = None
    reason: str = ''
    verified: bool = False

    def __post_init__(self):
        if self.variant != 'not_classifiable' and not self.verified:
            raise ValueError('Классификация без проверки таблицей не допускается!')
        if self.variant == 'form_composed' and self.form.n != self.map.n:
            raise ValueError('Форма и отображение заданы в разных пространствах!')
