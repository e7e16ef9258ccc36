from typing import List, Optional, Tuple, Union
from pydantic import BaseModel, Field

from ..services.cyclotomic_service import CycScalar, cyclotomic_service


class CycScalarSchema(BaseModel):
    N: int
    terms: List[Tuple[int, str]] = Field(default_factory=list)
    approx: Optional[Tuple[float, float]] = Field(default=None, alias="float")

    class Config:
        populate_by_name = True

    @classmethod
    def from_scalar(cls, value: CycScalar, with_float: bool = True) -> "CycScalarSchema":
        encoded = cyclotomic_service.encode(value)
        approx = None
        if with_float:
            z = value.to_complex()
            approx = (round(z.real, 12) + 0.0, round(z.imag, 12) + 0.0)
        return cls(N=encoded["N"], terms=[tuple(t) for t in encoded["terms"]], approx=approx)

    def to_scalar(self) -> CycScalar:
        return cyclotomic_service.decode({"N": self.N, "terms": self.terms})


# Integers render as plain integers in reports
ReportValue = Union[int, CycScalarSchema]


def render_value(value: CycScalar) -> ReportValue:
    if value.is_rational() and value.as_fraction().denominator == 1:
        return value.as_int()
    return CycScalarSchema.from_scalar(value)
