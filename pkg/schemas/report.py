from typing import Any, Literal

from pydantic import BaseModel, Field, field_validator

from config import settings_limits
from models.grassmann import Subspace
from models.irregularity import IrregularityCharacteristics
from models.reconstruction import ClassificationResult
from models.regularity import CoordinateSystem
from service.grassmann import enumerate_grassmannian

def _rows(s: Subspace | None) -> list[list[int]] | None:
    if s is None:
        return None
    return [list(row) for row in s.basis.to_rows()]

class SCoordinateSystem(BaseModel):
    lines: list[int]
    vectors: list[list[int]]

    @classmethod
    def of(cls, C: CoordinateSystem) -> 'SCoordinateSystem':
        index = enumerate_grassmannian(C.n, 1, C.spec)
        return cls(lines=list(C.lines), vectors=[list(index[i].basis.row(0)) for i in C.lines])

class SCharacteristics(BaseModel):
    lines: list[int]
    s_1: list[list[int]] | None
    n_1: int
    hyperplanes: list[int]
    s_hyper: list[list[int]] | None
    n_hyper: int

    @classmethod
    def of(cls, record: IrregularityCharacteristics) -> 'SCharacteristics':
        return cls(lines=list(record.lines), s_1=_rows(record.s_1), n_1=record.n_1,
                   hyperplanes=list(record.hyperplanes), s_hyper=_rows(record.s_hyper),
                   n_hyper=record.n_hyper)

class SClassification(BaseModel):
    variant: Literal['linear', 'form_composed', 'not_classifiable']
    sigma_exponent: int | None = None
    matrix: list[list[int]] | None = None
    form_gram: list[list[int]] | None = None
    witness: list[int] | None = None
    reason: str = ''
    verified: bool = False

    @classmethod
    def of(cls, result: ClassificationResult) -> 'SClassification':
        data: dict[str, Any] = dict(variant=result.variant, reason=result.reason, verified=result.verified)
        if result.map is not None:
            data['sigma_exponent'] = result.map.sigma.j
            data['matrix'] = [list(row) for row in result.map.matrix.to_rows()]
        if result.form is not None:
            data['form_gram'] = [list(row) for row in result.form.gram.to_rows()]
        if result.witness is not None:
            data['witness'] = list(result.witness)
        return cls(**data)

class SCheckResult(BaseModel):
    check: str
    passed: bool
    scope: str
    examined: int = Field(0, ge=0)
    counterexample: dict[str, Any] | None = None
    details: dict[str, Any] = Field(default_factory=dict)

    @field_validator('counterexample')
    @classmethod
    def counterexample_validate(cls, v, info):
        if info.data.get('passed') and v is not None:
            raise ValueError('У пройденной проверки не может быть контрпримера!')
        return v

class SReport(BaseModel):
    schema_version: int = settings_limits.REPORT_SCHEMA_VERSION
    command: str
    parameters: dict[str, Any] = Field(default_factory=dict)
    verdicts: dict[str, Any] = Field(default_factory=dict)
    certificates: dict[str, Any] = Field(default_factory=dict)
    timing: float = 0.0
