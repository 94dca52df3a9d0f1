#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
"""bastree provides a command-line client for building bounded-angle spanning trees.

Documents go to stdout (or --output), diagnostics and logs to stderr.
"""

from __future__ import annotations

import logging
import sys
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Final

import click

from . import exceptions as exc
from .builder import build_tree_from_path
from .const import (
    ORACLE_ALPHA,
    ORACLE_MAX_N,
    ConnectorPolicy,
    Generator,
    InputFormat,
    MatchingChoice,
    MstMethod,
    Phase2Mode,
    SourceKind,
)
from .document import (
    dump_document,
    format_points,
    load_document,
    oracle_to_document,
    parse_points,
    result_to_document,
)
from .matching import PathInstance
from .oracle import (
    OracleConfig,
    alpha_mst_bruteforce,
    collinear_instance,
    uniform_instance,
    uniform_points,
)
from .pipeline import approx_bast
from .schema.const import SZ_TREE, SZ_WEIGHTS
from .svg import render_svg
from .verify import verify_result

EXIT_OK: Final = 0
EXIT_FAILED: Final = 1  # the tree failed verification
EXIT_INPUT: Final = 2  # the input (or a parameter) is invalid

BENCH_SIZES: Final = (1_000, 10_000, 100_000)
BENCH_MAX_PER_POINT: Final = 6.0

STDIO: Final = "-"


_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunConfig:
    """The options of one command."""

    command: str
    input: str = STDIO
    fmt: InputFormat = InputFormat.TEXT
    source: SourceKind = SourceKind.PATH
    matching: MatchingChoice = MatchingChoice.AUTO
    phase2_mode: Phase2Mode = Phase2Mode.TWO_ROUND
    policy: ConnectorPolicy = ConnectorPolicy.SHORTEST
    mst_method: MstMethod = MstMethod.AUTO
    alpha: float = ORACLE_ALPHA
    max_n: int = ORACLE_MAX_N
    workers: int = 1
    compare: str | None = None
    generator: Generator = Generator.UNIFORM
    n: int = 0
    seed: int | None = None
    spacing: float = 1.0
    sizes: tuple[int, ...] = field(default=BENCH_SIZES)
    output: str = STDIO
    trace: bool = False
    counters: bool = False


def _check_positive_int(ctx: click.Context, param: click.Parameter, value: int) -> int:
    """Validate the parameter is a positive int."""

    if value is not None and value < 1:
        raise click.BadParameter("must >= 1")

    return value


def _check_positive_float(
    ctx: click.Context, param: click.Parameter, value: float
) -> float:
    """Validate the parameter is a positive float."""

    if value <= 0.0:
        raise click.BadParameter("must > 0")

    return value


def _check_sizes(
    ctx: click.Context, param: click.Parameter, value: tuple[int, ...]
) -> tuple[int, ...]:
    """Validate the sizes are all >= 2 (defaulting to a standard ladder)."""

    if not value:
        return BENCH_SIZES

    if any(n < 2 for n in value):
        raise click.BadParameter("must all be >= 2")

    return value


def _read(path: str) -> str:
    with click.open_file(path) as fp:
        return fp.read()  # type: ignore[no-any-return]


def _write(path: str, text: str) -> None:
    with click.open_file(path, "w") as fp:
        fp.write(text)


def _run(cmd: Callable[[RunConfig], int], config: RunConfig) -> int:
    """Run a command, and map bad input to its exit code."""

    _LOGGER.debug(f"Running: {config}")

    try:
        return cmd(config)

    except (exc.InvalidInput, exc.GeometryError) as err:
        click.echo(f"Error: {err.message}", err=True)
        return EXIT_INPUT

    except OSError as err:
        click.echo(f"Error: {err}", err=True)
        return EXIT_INPUT


def cmd_build(config: RunConfig) -> int:
    """Build the tree of a point file, verify it, and write its document."""

    points = parse_points(_read(config.input), config.fmt)

    if config.source == SourceKind.MST:
        approx = approx_bast(
            points,
            method=config.mst_method,
            matching=config.matching,
            phase2_mode=config.phase2_mode,
            policy=config.policy,
        )
        path, result = approx.path, approx.result
        order: tuple[int, ...] | None = approx.order
        mst_weight: float | None = approx.mst_weight

    else:
        path = PathInstance(tuple(points))
        result = build_tree_from_path(
            path,
            matching=config.matching,
            phase2_mode=config.phase2_mode,
            policy=config.policy,
        )
        order, mst_weight = None, None

    report = verify_result(path, result, mst_weight=mst_weight)

    doc = result_to_document(
        path,
        result,
        report,
        source=config.source,
        order=order,
        mst_weight=mst_weight,
        trace=config.trace,
        counters=config.counters,
    )
    _write(config.output, dump_document(doc))

    if not report.passed:
        for check in report.failed():
            click.echo(f"Failed: {check}", err=True)
        return EXIT_FAILED

    return EXIT_OK


def cmd_oracle(config: RunConfig) -> int:
    """Find a minimum-weight α-spanning tree by enumeration (small inputs only)."""

    points = parse_points(_read(config.input), config.fmt)
    oracle_config = OracleConfig(
        alpha=config.alpha, max_n=config.max_n, workers=config.workers
    )

    tree_weight: float | None = None
    if config.compare is not None:
        tree_weight = load_document(_read(config.compare))[SZ_WEIGHTS][SZ_TREE]

    oracle = alpha_mst_bruteforce(points, oracle_config)
    doc = oracle_to_document(points, oracle, tree_weight=tree_weight)

    _write(config.output, dump_document(doc))
    return EXIT_OK


def cmd_svg(config: RunConfig) -> int:
    """Draw a result document."""

    doc = load_document(_read(config.input))
    _write(config.output, render_svg(doc))
    return EXIT_OK


def cmd_gen(config: RunConfig) -> int:
    """Write a (seeded) point file."""

    if config.generator == Generator.COLLINEAR:
        points = list(collinear_instance(config.n, config.spacing).points)
        comment = f"collinear n={config.n} spacing={config.spacing!r}"
    else:
        points = uniform_points(config.n, config.seed)
        comment = f"uniform n={config.n} seed={config.seed}"

    if config.fmt == InputFormat.JSON:
        comment = ""

    _write(config.output, format_points(points, config.fmt, comment))
    return EXIT_OK


def cmd_bench(config: RunConfig) -> int:
    """Time the builder on uniform instances, and count its pair examinations."""

    lines = ["n\tseconds\texaminations\tper_point\tper_edge\trounds"]
    bounded = True

    for n in config.sizes:
        path = uniform_instance(n, config.seed)

        start = time.perf_counter()
        result = build_tree_from_path(
            path, phase2_mode=config.phase2_mode, policy=config.policy
        )
        elapsed = time.perf_counter() - start

        counters = result.counters
        per_point = counters.examinations / n
        bounded &= per_point <= BENCH_MAX_PER_POINT

        lines.append(
            f"{n}\t{elapsed:.3f}\t{counters.examinations}\t{per_point:.3f}\t"
            f"{counters.per_edge:.3f}\t{counters.phase2_rounds}"
        )
        _LOGGER.debug(f"Bench n={n}: {counters}")

    _write(config.output, "\n".join(lines) + "\n")
    return EXIT_OK if bounded else EXIT_FAILED


#
# The click surface
_FORMAT_OPTION = click.option(
    "--format",
    "-f",
    "fmt",
    type=click.Choice([str(f) for f in InputFormat]),
    default=str(InputFormat.TEXT),
    help="The point file format.",
)
_OUTPUT_OPTION = click.option(
    "--output", "-o", default=STDIO, type=click.Path(), help="The output file."
)
_PHASE2_OPTION = click.option(
    "--phase2",
    "phase2_mode",
    type=click.Choice([str(m) for m in Phase2Mode]),
    default=str(Phase2Mode.TWO_ROUND),
    help="How Phase II sweeps the matching.",
)
_POLICY_OPTION = click.option(
    "--connectors",
    "policy",
    type=click.Choice([str(p) for p in ConnectorPolicy]),
    default=str(ConnectorPolicy.SHORTEST),
    help="Which connector joins two consecutive matching edges.",
)


@click.group()
@click.option("--debug", "-d", is_flag=True, help="Enable debug logging.")
@click.pass_context
def cli(ctx: click.Context, debug: bool | None = None) -> None:
    logging.basicConfig(
        level=logging.DEBUG if debug else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        stream=sys.stderr,
    )

    ctx.obj = ctx.obj or {}  # may be None


@cli.command()
@click.argument("input", default=STDIO, type=click.Path(allow_dash=True))
@_FORMAT_OPTION
@click.option(  # --source
    "--source",
    "-s",
    type=click.Choice([str(s) for s in SourceKind]),
    default=str(SourceKind.PATH),
    help="Use the points in file order (path), or the order of their MST (mst).",
)
@click.option(  # --matching
    "--matching",
    "-m",
    type=click.Choice([str(m) for m in MatchingChoice]),
    default=str(MatchingChoice.AUTO),
    help="Which alternate matching of the path to use.",
)
@_PHASE2_OPTION
@_POLICY_OPTION
@click.option(  # --mst-method
    "--mst-method",
    type=click.Choice([str(m) for m in MstMethod]),
    default=str(MstMethod.AUTO),
    help="How the MST is computed (with --source mst).",
)
@click.option("--trace", is_flag=True, help="Include the orientation trace.")
@click.option("--counters", is_flag=True, help="Include the work counters.")
@_OUTPUT_OPTION
@click.pass_context
def build(
    ctx: click.Context,
    input: str,
    fmt: str,
    source: str,
    matching: str,
    phase2_mode: str,
    policy: str,
    mst_method: str,
    trace: bool,
    counters: bool,
    output: str,
) -> None:
    """Build (and verify) the bounded-angle spanning tree of a point file."""

    config = RunConfig(
        command="build",
        input=input,
        fmt=InputFormat(fmt),
        source=SourceKind(source),
        matching=MatchingChoice(matching),
        phase2_mode=Phase2Mode(phase2_mode),
        policy=ConnectorPolicy(policy),
        mst_method=MstMethod(mst_method),
        trace=trace,
        counters=counters,
        output=output,
    )
    ctx.exit(_run(cmd_build, config))


@cli.command()
@click.argument("input", default=STDIO, type=click.Path(allow_dash=True))
@_FORMAT_OPTION
@click.option(  # --alpha
    "--alpha",
    "-a",
    default=ORACLE_ALPHA,
    type=float,
    help="The cone angle, in radians (default 2π/3).",
)
@click.option(  # --max-n
    "--max-n",
    default=ORACLE_MAX_N,
    callback=_check_positive_int,
    type=int,
    help="The largest input the oracle accepts.",
)
@click.option(  # --workers
    "--workers",
    "-w",
    default=1,
    callback=_check_positive_int,
    type=int,
    help="The number of worker processes.",
)
@click.option(  # --compare
    "--compare",
    "-c",
    type=click.Path(exists=True, dir_okay=False),
    help="A build document whose tree is compared with the optimum.",
)
@_OUTPUT_OPTION
@click.pass_context
def oracle(
    ctx: click.Context,
    input: str,
    fmt: str,
    alpha: float,
    max_n: int,
    workers: int,
    compare: str | None,
    output: str,
) -> None:
    """Find the minimum-weight α-spanning tree of a small point file."""

    config = RunConfig(
        command="oracle",
        input=input,
        fmt=InputFormat(fmt),
        alpha=alpha,
        max_n=max_n,
        workers=workers,
        compare=compare,
        output=output,
    )
    ctx.exit(_run(cmd_oracle, config))


@cli.command()
@click.argument("document", default=STDIO, type=click.Path(allow_dash=True))
@_OUTPUT_OPTION
@click.pass_context
def svg(ctx: click.Context, document: str, output: str) -> None:
    """Draw a build document as an SVG figure."""

    config = RunConfig(command="svg", input=document, output=output)
    ctx.exit(_run(cmd_svg, config))


@cli.command()
@click.argument(
    "generator",
    type=click.Choice([str(g) for g in Generator]),
    default=str(Generator.UNIFORM),
)
@click.option(  # --n
    "--n",
    "-n",
    "n",
    required=True,
    callback=_check_positive_int,
    type=int,
    help="The number of points.",
)
@click.option("--seed", type=int, help="The seed of the uniform generator.")
@click.option(  # --spacing
    "--spacing",
    default=1.0,
    callback=_check_positive_float,
    type=float,
    help="The spacing of the collinear generator.",
)
@_FORMAT_OPTION
@_OUTPUT_OPTION
@click.pass_context
def gen(
    ctx: click.Context,
    generator: str,
    n: int,
    seed: int | None,
    spacing: float,
    fmt: str,
    output: str,
) -> None:
    """Generate a point file (uniform in the unit square, or collinear)."""

    config = RunConfig(
        command="gen",
        generator=Generator(generator),
        n=n,
        seed=seed,
        spacing=spacing,
        fmt=InputFormat(fmt),
        output=output,
    )
    ctx.exit(_run(cmd_gen, config))


@cli.command()
@click.option(  # --n
    "--n",
    "-n",
    "sizes",
    multiple=True,
    callback=_check_sizes,
    type=int,
    help="An instance size (may be repeated).",
)
@click.option("--seed", default=0, type=int, help="The seed of the instances.")
@_PHASE2_OPTION
@_POLICY_OPTION
@_OUTPUT_OPTION
@click.pass_context
def bench(
    ctx: click.Context,
    sizes: tuple[int, ...],
    seed: int,
    phase2_mode: str,
    policy: str,
    output: str,
) -> None:
    """Time the builder on uniform instances of growing size."""

    config = RunConfig(
        command="bench",
        sizes=sizes,
        seed=seed,
        phase2_mode=Phase2Mode(phase2_mode),
        policy=ConnectorPolicy(policy),
        output=output,
    )
    ctx.exit(_run(cmd_bench, config))


def main() -> None:
    try:
        cli(obj={})  # default for ctx.obj is None

    except click.ClickException as err:
        print(f"Error: {err}", file=sys.stderr)
        sys.exit(EXIT_INPUT)


if __name__ == "__main__":
    main()
