from typing import Dict, List, Optional, Tuple
from pydantic import BaseModel, Field

from .scalar_schemas import CycScalarSchema


class TreeState(BaseModel):
    keys: List[Tuple[int, int]]
    tree: List[int]


class MorphismEntry(BaseModel):
    src: TreeState
    dst: TreeState
    v: CycScalarSchema


class MorphismSchema(BaseModel):
    dom: List[List[Tuple[int, int]]]
    cod: List[List[Tuple[int, int]]]
    entries: List[MorphismEntry] = Field(default_factory=list)


class AlgebraFile(BaseModel):
    name: str
    category: str
    object: List[List[Tuple[int, int]]]
    mu: MorphismSchema
    eta: MorphismSchema
    delta: MorphismSchema
    eps: MorphismSchema


class AxiomFailure(BaseModel):
    axiom: str
    message: str = ""


class AlgebraReport(BaseModel):
    algebra: str
    passed: bool
    flags: Dict[str, bool] = Field(default_factory=dict)
    failures: List[AxiomFailure] = Field(default_factory=list)


class SolveResult(BaseModel):
    object: str
    solutions: List[AlgebraFile] = Field(default_factory=list)
    gauge: Optional[List[str]] = None
    diagnostics: List[str] = Field(default_factory=list)


class ModuleAction(BaseModel):
    algebra: str
    sign: str
    rho: MorphismSchema


class ModuleFile(BaseModel):
    name: str
    category: str
    object: List[List[Tuple[int, int]]]
    actions: List[ModuleAction]
    period: Optional[int] = None
    phi: Optional[MorphismSchema] = None
