from typing import List, Literal, Optional, Tuple
from pydantic import BaseModel, Field


class LineDecoration(BaseModel):
    algebra: str
    sign: Literal["+", "-"] = "+"


class SphereFile(BaseModel):
    """Decorated sphere with meridional algebra lines and multi-module poles"""
    lines: List[LineDecoration] = Field(default_factory=list)
    south: str
    north: str
    star: int = 0
    marks: int = 1


class SurfaceSpec(BaseModel):
    name: str
    source: str = "C"
    target: str = "C"


class LineSpec(BaseModel):
    name: str
    decorations: List[Tuple[str, Literal["+", "-"]]] = Field(default_factory=list)
    orientation: Literal["+", "-"] = "+"
    module: Optional[str] = None
    object: Optional[List[Tuple[int, int]]] = None
    reversed: Optional[List[Tuple[str, Literal["+", "-"]]]] = None


class DefectDataSpec(BaseModel):
    surfaces: List[SurfaceSpec] = Field(default_factory=list)
    lines: List[LineSpec] = Field(default_factory=list)


class DefectReport(BaseModel):
    passed: bool
    stratum: Optional[str] = None
    message: str = ""


class StateSpaceOut(BaseModel):
    lines: int
    star: int
    marks: int
    dimension: int
    module_hom_dim: Optional[int] = None
