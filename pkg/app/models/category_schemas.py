from typing import List, Tuple
from pydantic import BaseModel, Field, field_validator

from .scalar_schemas import CycScalarSchema


class FEntry(BaseModel):
    l: Tuple[int, int, int, int, int, int]
    v: CycScalarSchema


class REntry(BaseModel):
    l: Tuple[int, int, int]
    v: CycScalarSchema


class CategoryFile(BaseModel):
    name: str
    labels: List[str]
    unit: int = 0
    dual: List[int]
    fusion: List[Tuple[int, int, int]]
    F: List[FEntry] = Field(default_factory=list)
    R: List[REntry] = Field(default_factory=list)
    theta: List[CycScalarSchema]
    qdim: List[CycScalarSchema]

    @field_validator("dual")
    @classmethod
    def dual_is_involution(cls, dual: List[int]) -> List[int]:
        for i, j in enumerate(dual):
            if not 0 <= j < len(dual) or dual[j] != i:
                raise ValueError(f"dual is not an involution at label {i}")
        return dual


class SmatrixOut(BaseModel):
    category: str
    S: List[List[CycScalarSchema]]
    T: List[CycScalarSchema]
    determinant_nonzero: bool


class AnomalyOut(BaseModel):
    category: str
    p_plus: CycScalarSchema
    p_minus: CycScalarSchema
    anomaly_free_linear: bool
    p_plus_squared: CycScalarSchema
    p_minus_squared: CycScalarSchema
    anomaly_free_squared: bool
