from typing import Any, Dict, List, Literal, Optional
from pydantic import BaseModel, Field

from .scalar_schemas import ReportValue


class CheckFailure(BaseModel):
    check: str
    labels: List[Any] = Field(default_factory=list)
    lhs: Optional[ReportValue] = None
    rhs: Optional[ReportValue] = None
    message: str = ""


class VerificationReport(BaseModel):
    check: str
    passed: bool
    mode: Literal["full", "sampled", "trust"] = "full"
    seed: Optional[int] = None
    instances: int = 0
    failure: Optional[CheckFailure] = None
    failures: List[CheckFailure] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict)


class ReportBundle(BaseModel):
    category: str
    passed: bool
    seed: Optional[int] = None
    reports: List[VerificationReport] = Field(default_factory=list)


class RunConfig(BaseModel):
    command: str
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    format: Literal["json", "tsv"] = "json"
    mode: Literal["full", "sampled", "trust"] = "sampled"
    samples: int = 100000
    seed: int = 1
    parallelism: int = 1
