from pydantic import BaseModel, Field, field_validator, model_validator

from config import settings_limits
from service.gf import MODULI

class SGrassmannHeader(BaseModel):
    q: int
    n: int = Field(..., ge=1)
    k: int = Field(..., ge=0)

    @field_validator('q')
    @classmethod
    def q_validate(cls, v: int):
        if v not in MODULI:
            raise ValueError(f'Поле порядка {v} не поддерживается!')
        return v

    @field_validator('n')
    @classmethod
    def n_validate(cls, v: int):
        if v > settings_limits.MAX_N:
            raise ValueError(f'n = {v} больше допустимого {settings_limits.MAX_N}!')
        return v

    @model_validator(mode='after')
    def k_validate(self):
        if self.k > self.n:
            raise ValueError(f'k = {self.k} больше n = {self.n}!')
        return self

class SPlaneSetHeader(SGrassmannHeader):
    count: int = Field(..., ge=0)

    def line(self) -> str:
        return f'{self.q} {self.n} {self.k} {self.count}'

class SMapTableHeader(SGrassmannHeader):
    k_prime: int = Field(..., ge=0)

    @model_validator(mode='after')
    def k_prime_validate(self):
        if self.k_prime > self.n:
            raise ValueError(f"k' = {self.k_prime} больше n = {self.n}!")
        return self

    def line(self) -> str:
        return f'{self.q} {self.n} {self.k} {self.k_prime}'
