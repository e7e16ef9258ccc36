from typing import Dict, List, Literal, Optional, Tuple
from pydantic import BaseModel, Field

from .algebra_schemas import MorphismSchema


class StrandSpec(BaseModel):
    obj: List[Tuple[int, int]]
    up: bool = True


class GeneratorSpec(BaseModel):
    gen: Literal["id", "braid+", "braid-", "cup", "cap", "twist+", "twist-",
                 "coupon", "named", "half+", "half-"]
    strand: Optional[StrandSpec] = None
    ref: Optional[str] = None
    morphism: Optional[MorphismSchema] = None


class DiagramFile(BaseModel):
    """Named generators refer to the maps of the algebra and module files listed here"""
    category: str
    algebras: Dict[str, str] = Field(default_factory=dict)
    modules: Dict[str, str] = Field(default_factory=dict)
    boundary_in: List[StrandSpec] = Field(default_factory=list)
    slices: List[List[GeneratorSpec]] = Field(default_factory=list)


class TypecheckReport(BaseModel):
    passed: bool
    slice: Optional[int] = None
    message: str = ""
    closed: bool = False
    paths: int = 0
