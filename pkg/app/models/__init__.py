"""
Models Package

Pydantic models for every JSON format the toolkit reads or writes:
- scalar_schemas: exact cyclotomic scalars
- category_schemas: category files, S/T output, anomaly output
- report_schemas: verification reports and run configuration
- algebra_schemas: morphisms, algebra and module files
- diagram_schemas: sliced diagram files
- defect_schemas: defect data and sphere descriptors
- invariant_schemas: centers, full centers, invariants and the table
"""

from .scalar_schemas import CycScalarSchema, ReportValue, render_value
from .category_schemas import AnomalyOut, CategoryFile, FEntry, REntry, SmatrixOut
from .report_schemas import CheckFailure, ReportBundle, RunConfig, VerificationReport
from .algebra_schemas import (
    AlgebraFile,
    AlgebraReport,
    AxiomFailure,
    ModuleFile,
    MorphismSchema,
    SolveResult,
)
from .diagram_schemas import DiagramFile, GeneratorSpec, StrandSpec, TypecheckReport
from .defect_schemas import DefectDataSpec, DefectReport, LineSpec, SphereFile, StateSpaceOut, SurfaceSpec
from .invariant_schemas import CenterOut, FullCenterOut, SphereInvariantOut, T3Out, TableOut

__all__ = [
    'CycScalarSchema', 'ReportValue', 'render_value',
    'AnomalyOut', 'CategoryFile', 'FEntry', 'REntry', 'SmatrixOut',
    'CheckFailure', 'ReportBundle', 'RunConfig', 'VerificationReport',
    'AlgebraFile', 'AlgebraReport', 'AxiomFailure', 'ModuleFile', 'MorphismSchema', 'SolveResult',
    'DiagramFile', 'GeneratorSpec', 'StrandSpec', 'TypecheckReport',
    'DefectDataSpec', 'DefectReport', 'LineSpec', 'SphereFile', 'StateSpaceOut', 'SurfaceSpec',
    'CenterOut', 'FullCenterOut', 'SphereInvariantOut', 'T3Out', 'TableOut',
]
