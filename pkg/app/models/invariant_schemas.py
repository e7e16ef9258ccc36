from typing import Dict, List, Literal, Optional
from pydantic import BaseModel, Field

from .scalar_schemas import ReportValue


class CenterOut(BaseModel):
    """Left or right center of an algebra"""
    algebra: str
    side: Literal["left", "right"]
    multiplicities: Dict[int, int] = Field(default_factory=dict)
    qdim: ReportValue


class ConventionOut(BaseModel):
    variant: str
    passing: List[str] = Field(default_factory=list)


class FullCenterOut(BaseModel):
    algebra: str
    Z: List[List[int]]
    trace: int
    convention: ConventionOut


class T3Out(BaseModel):
    """Invariants of the three torus embeddings in T^3"""
    algebra: str
    iota0_plus: ReportValue
    iota0_minus: ReportValue
    iota1_plus: int
    iota1_minus: int
    iota2: int
    center: Dict[str, CenterOut] = Field(default_factory=dict)
    convention: Optional[ConventionOut] = None


class SphereInvariantOut(BaseModel):
    algebra: str
    manifold: Literal["S2xS1", "T3"]
    value: ReportValue


class TableRow(BaseModel):
    """One invariant per column; iota0 and iota1 carry the minus variant too"""
    invariant: str
    values: List[Optional[ReportValue]]
    minus: Optional[List[Optional[ReportValue]]] = None


class TableOut(BaseModel):
    category: str
    columns: List[str]
    rows: List[TableRow] = Field(default_factory=list)
    seed: Optional[int] = None
    diagnostics: Dict[str, List[str]] = Field(default_factory=dict)
    passed: bool = True
