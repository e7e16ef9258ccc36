#!/usr/bin/env python3
"""
mtcdef - Entry Point

Command-line front end for category generation and verification, algebra
solving, diagram evaluation and the embedded-surface invariants.

Usage:
    python main.py gen --level 16 -o sl2_16.json
    python main.py verify sl2_16.json --checks pentagon,hexagon --sample 1000
    python main.py algebra solve --category sl2_16 --object "0+16"
    python main.py table --level 16 --format tsv
"""

import functools
import sys
from pathlib import Path
from typing import List, Optional

import click
from pydantic import BaseModel

from app.core import MtcdefError, console, settings
from app.models.algebra_schemas import SolveResult
from app.models.category_schemas import CategoryFile
from app.models.report_schemas import RunConfig
from app.models.scalar_schemas import CycScalarSchema, render_value
from app.services.category_service import category_service, gen_sl2k
from app.services.cyclotomic_service import to_float
from app.services.defect_service import defect_service
from app.services.diagram_service import diagram_service
from app.services.frobenius_service import frobenius_service
from app.services.homspace_service import SSObject
from app.services.invariant_service import CATALOG, invariant_service
from app.services.serialization_service import serialization_service

EMBEDDINGS = {
    "iota0+": "iota0_plus",
    "iota0-": "iota0_minus",
    "iota1+": "iota1_plus",
    "iota1-": "iota1_minus",
    "iota2": "iota2",
}


def handles_errors(command):
    """Map toolkit errors to exit codes: 1 for failed checks, 2 for bad input"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except MtcdefError as e:
            console.failure(e.message)
            sys.exit(e.exit_code)

    return wrapper


def _cell(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, CycScalarSchema):
        z = to_float(value.to_scalar())
        return f"{z.real:.12g}" if abs(z.imag) < 1e-12 else f"{z.real:.12g}{z.imag:+.12g}i"
    return str(value)


def _pair(plus, minus) -> str:
    """A plus/minus pair as one cell, collapsed when both agree"""
    if plus == minus:
        return _cell(plus)
    return f"{_cell(plus)}/{_cell(minus)}"


def emit(ctx: click.Context, payload: BaseModel, rows: Optional[List[List[str]]] = None):
    """JSON on stdout, or TSV rows when requested and available"""
    config: RunConfig = ctx.obj
    if config.format == "tsv" and rows is not None:
        for row in rows:
            click.echo("\t".join(_cell(x) for x in row))
        return
    click.echo(payload.model_dump_json(indent=2, by_alias=True))


def _config(ctx: click.Context, command: str, **fields) -> RunConfig:
    config = ctx.obj.model_copy(update={"command": command, **fields})
    ctx.obj = config
    return config


@click.group(help=settings.APP_DESCRIPTION)
@click.version_option(settings.APP_VERSION, prog_name=settings.APP_TITLE)
@click.option("--verbose", is_flag=True, help="Print status lines on stderr")
@click.option("--parallelism", type=int, default=settings.PARALLELISM, show_default=True)
@click.option("--seed", type=int, default=settings.SEED, show_default=True)
@click.option("--sample", "samples", type=int, default=settings.SAMPLES, show_default=True,
              help="Pentagon samples when verifying loaded categories")
@click.option("--trust", is_flag=True, help="Skip verification of loaded category and algebra files")
@click.option("--format", "fmt", type=click.Choice(["json", "tsv"]), default="json", show_default=True)
@click.pass_context
def cli(ctx, verbose, parallelism, seed, samples, trust, fmt):
    if verbose:
        console.verbose = True
        console.info("Loaded .env.local" if settings.env_loaded else "No .env.local found, using default settings")
    invariant_service.parallelism = max(parallelism, 1)
    ctx.obj = RunConfig(command="", format=fmt, mode="trust" if trust else "sampled",
                        samples=samples, seed=seed, parallelism=parallelism)


# -- categories ---------------------------------------------------------------


@cli.command()
@click.option("--category", type=click.Choice(["sl2"]), default="sl2", show_default=True)
@click.option("--level", type=int, required=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False), required=True)
@click.pass_context
@handles_errors
def gen(ctx, category, level, output):
    """Generate and verify sl(2)_k data"""
    config = _config(ctx, "gen", output_path=output)
    if level < 1:
        raise click.BadParameter("level must be at least 1", param_hint="--level")
    C = gen_sl2k(level)
    bundle = category_service.verify_all(C, mode="sampled", samples=config.samples, seed=config.seed)
    if not bundle.passed:
        emit(ctx, bundle)
        sys.exit(1)
    category_service.dump_category(C, output)
    emit(ctx, bundle)


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--checks", default="pentagon,hexagon,ribbon,modularity", show_default=True)
@click.option("--full", is_flag=True, help="Check every pentagon instance instead of sampling")
@click.pass_context
@handles_errors
def verify(ctx, path, checks, full):
    """Run the selected verifiers on a category file"""
    config = _config(ctx, "verify", input_path=path, mode="full" if full else "sampled")
    data = serialization_service.read_model(path, CategoryFile)
    C = category_service.from_file(data)
    names = [c.strip() for c in checks.split(",") if c.strip()]
    bundle = category_service.verify_all(C, names, mode=config.mode, samples=config.samples, seed=config.seed)
    emit(ctx, bundle, [[r.check, "pass" if r.passed else "fail"] for r in bundle.reports])
    if not bundle.passed:
        sys.exit(1)


# -- algebras -----------------------------------------------------------------


@cli.group()
def algebra():
    """Solve for and check Frobenius algebras"""


@algebra.command()
@click.option("--category", "category_ref", default="sl2_16", show_default=True)
@click.option("--object", "object_text", required=True, help="Direct sum such as 0+8+16")
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Write solution i to <stem>_i.json")
@click.pass_context
@handles_errors
def solve(ctx, category_ref, object_text, output):
    """All haploid symmetric special algebra structures on an object"""
    config = _config(ctx, "algebra solve", output_path=output)
    C = serialization_service.resolve_category(category_ref, trust=config.mode == "trust",
                                               samples=config.samples, seed=config.seed)
    outcome = frobenius_service.solve_haploid_algebra(C, SSObject.parse(object_text))
    result = SolveResult(
        object=object_text,
        solutions=[serialization_service.algebra_to_file(A, category_ref) for A in outcome.algebras],
        gauge=[f"m({a},{b};{c})" for a, b, c in outcome.gauge] or None,
        diagnostics=outcome.diagnostics,
    )
    if output:
        stem = Path(output)
        for index, data in enumerate(result.solutions, start=1):
            serialization_service.write_model(stem.with_name(f"{stem.stem}_{index}{stem.suffix or '.json'}"), data)
    emit(ctx, result)


@algebra.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
@handles_errors
def check(ctx, path):
    """Re-verify the axioms of an algebra file"""
    config = _config(ctx, "algebra check", input_path=path)
    A = serialization_service.load_algebra(path, trust=config.mode == "trust", samples=config.samples,
                                           seed=config.seed, verify=False)
    report = frobenius_service.check_algebra(A)
    emit(ctx, report, [[name, str(flag)] for name, flag in sorted(report.flags.items())])
    if not report.passed:
        sys.exit(1)


# -- diagrams -----------------------------------------------------------------


@cli.command(name="eval")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
@handles_errors
def evaluate(ctx, path):
    """Evaluate a diagram file to a scalar or a morphism"""
    config = _config(ctx, "eval", input_path=path)
    D = diagram_service.load_diagram(path, trust=config.mode == "trust", samples=config.samples,
                                     seed=config.seed)
    report = diagram_service.typecheck(D)
    if not report.passed:
        emit(ctx, report)
        sys.exit(2)
    if D.closed:
        value = render_value(diagram_service.evaluate_closed(D))
        click.echo(value if isinstance(value, int) else value.model_dump_json(indent=2, by_alias=True))
        return
    emit(ctx, serialization_service.morphism_to_schema(diagram_service.evaluate(D)))


# -- invariants ---------------------------------------------------------------


@cli.group()
def invariant():
    """Invariants of embedded surfaces and defect spheres"""


@invariant.command()
@click.option("--algebra", "algebra_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--embedding", default=",".join(EMBEDDINGS), show_default=True)
@click.pass_context
@handles_errors
def t3(ctx, algebra_path, embedding):
    """Invariants of the three torus embeddings in T3"""
    names = [e.strip() for e in embedding.split(",") if e.strip()]
    unknown = [e for e in names if e not in EMBEDDINGS]
    if unknown:
        raise click.BadParameter(f"unknown embedding {unknown[0]!r}", param_hint="--embedding")
    config = _config(ctx, "invariant t3", input_path=algebra_path)
    A = serialization_service.load_algebra(algebra_path, trust=config.mode == "trust", samples=config.samples,
                                           seed=config.seed)
    out = invariant_service.t3_invariants(A, with_full_center="iota2" in names)
    emit(ctx, out, [[name, getattr(out, EMBEDDINGS[name])] for name in names])


@invariant.command()
@click.option("--algebra", "algebra_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--manifold", type=click.Choice(sorted(CATALOG)), required=True)
@click.pass_context
@handles_errors
def sphere(ctx, algebra_path, manifold):
    """Invariant of an embedded sphere"""
    config = _config(ctx, "invariant sphere", input_path=algebra_path)
    A = serialization_service.load_algebra(algebra_path, trust=config.mode == "trust", samples=config.samples,
                                           seed=config.seed)
    out = invariant_service.sphere_embedding_invariant(A, manifold)
    emit(ctx, out, [[manifold, out.value]])


@invariant.command(name="state-space")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--marks", type=int, default=None, help="Marks per line; defaults to the descriptor's")
@click.pass_context
@handles_errors
def state_space(ctx, path, marks):
    """Dimension of the state space of a decorated sphere"""
    config = _config(ctx, "invariant state-space", input_path=path)
    S = defect_service.load_sphere(path, trust=config.mode == "trust", samples=config.samples,
                                  seed=config.seed)
    out = defect_service.state_space_out(S, t=marks)
    emit(ctx, out, [["dimension", out.dimension], ["module_hom_dim", out.module_hom_dim]])


@cli.command()
@click.option("--category", type=click.Choice(["sl2"]), default="sl2", show_default=True)
@click.option("--level", type=int, default=16, show_default=True)
@click.pass_context
@handles_errors
def table(ctx, category, level):
    """Generate, verify, solve and tabulate the T3 invariants of A17, D10 and E7"""
    config = _config(ctx, "table")
    C = gen_sl2k(level)
    bundle = category_service.verify_all(C, mode="sampled", samples=config.samples, seed=config.seed)
    if not bundle.passed:
        emit(ctx, bundle)
        sys.exit(1)
    algebras, diagnostics = invariant_service.standard_algebras(C)
    out = invariant_service.table(C, algebras, seed=config.seed, diagnostics=diagnostics)
    rows: List[List] = [["invariant"] + out.columns]
    for row in out.rows:
        if row.minus is None:
            rows.append([row.invariant] + list(row.values))
        else:
            rows.append([row.invariant] + [_pair(p, m) for p, m in zip(row.values, row.minus)])
    emit(ctx, out, rows)
    if not out.passed:
        sys.exit(1)


def main():
    """Main entry point for the command line"""
    cli(prog_name="mtcdef")


if __name__ == "__main__":
    main()
