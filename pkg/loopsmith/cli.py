"""CLI entry point for loopsmith."""

from __future__ import annotations

import dataclasses
import logging
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

import click
from pydantic import ValidationError

from . import __version__
from .config import Config
from .core.bose import BoseParams, bose_loop, bose_sts, mp_criterion
from .core.catalog import by_name
from .core.experiment import run_experiment, unreachable_published_orders
from .core.loop import LoopTable, associator
from .core.products import direct_product
from .core.scan import ScanOptions
from .core.sts import loop_to_sts, sts_to_loop
from .core.verdict import moufang_theorem_verdict, mp_status, property_report
from .errors import LoopsmithError
from .formats import (
    ReportMode,
    parse_loop,
    parse_sts,
    property_document,
    verdict_document,
    write_loop,
    write_report,
    write_sts,
)
from .schemas import ExperimentRow, MPKind, ReportDocument, ReportWitness

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PROPERTY_FAILED = 1
EXIT_INVALID = 2

_EXPERIMENT_COLUMNS = ("n", "order", "criterion", "brute_verdict", "published", "agree")

input_file = click.Path(exists=True, dir_okay=False, path_type=Path)
output_file = click.Path(dir_okay=False, writable=True, path_type=Path)


@contextmanager
def invalid_input_exits() -> Iterator[None]:
    """Turn input, parameter and configuration errors into exit code 2."""
    try:
        yield
    except LoopsmithError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INVALID)
    except ValidationError as exc:
        problems = "; ".join(error["msg"] for error in exc.errors())
        click.echo(f"error: BAD_PARAMETER: {problems}", err=True)
        sys.exit(EXIT_INVALID)
    except (OSError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INVALID)


def _config(ctx: click.Context) -> Config:
    config: Config = ctx.obj
    return config


def _emit(report: ReportDocument, machine: bool, err: bool = False) -> None:
    mode = ReportMode.MACHINE if machine else ReportMode.TEXT
    click.echo(write_report(report, mode), nl=False, err=err)


def _read_loop(path: Path) -> LoopTable:
    return parse_loop(path.read_text(encoding="utf-8"))


def _deliver(artifact: str, report: ReportDocument, out: Path | None, machine: bool) -> None:
    """Write the artifact to --out and the report to stdout, or the artifact
    to stdout and the report to stderr."""
    if out is None:
        click.echo(artifact, nl=False)
        _emit(report, machine, err=True)
        return
    out.write_text(artifact, encoding="utf-8", newline="\n")
    _emit(report, machine)


def _experiment_fields(row: ExperimentRow) -> tuple[str, ...]:
    published = row.published.value if row.published else "-"
    return (
        str(row.n),
        str(row.order),
        str(row.criterion).lower(),
        row.brute_verdict.value,
        published,
        str(row.agree).lower(),
    )


def _experiment_line(fields: tuple[str, ...], machine: bool) -> str:
    if machine:
        return "\t".join(fields)
    widths = (4, 6, 9, 13, 9, 5)
    return " ".join(field.rjust(width) for field, width in zip(fields, widths))


def _scan_options(ctx: click.Context, jobs: int | None, deterministic: bool = False) -> ScanOptions:
    return ScanOptions.from_config(_config(ctx), jobs=1 if deterministic else jobs)


jobs_option = click.option(
    "--jobs",
    "-j",
    type=click.IntRange(min=1),
    default=None,
    help="Worker processes for triple scans (default: LOOPSMITH_JOBS or CPU count)",
)
machine_option = click.option(
    "--machine", is_flag=True, help="Tab-separated key/value output for scripts"
)
out_option = click.option("--out", "-o", type=output_file, default=None, help="Output file")


@click.group()
@click.version_option(version=__version__)
@click.option("--log-level", default=None, help="Logging level (default: LOOPSMITH_LOG_LEVEL)")
@click.pass_context
def cli(ctx: click.Context, log_level: str | None) -> None:
    """loopsmith - finite loops, Steiner loops and Moufang's Property."""
    with invalid_input_exits():
        config = Config()
        if log_level is not None:
            config.log_level = log_level.upper()
            if not isinstance(logging.getLevelName(config.log_level), int):
                raise click.BadParameter(f"unknown level {log_level!r}", param_hint="--log-level")
    logging.basicConfig(
        stream=sys.stderr, format="%(asctime)s %(levelname)s %(name)s: %(message)s"
    )
    logging.getLogger("loopsmith").setLevel(config.numeric_log_level)
    ctx.obj = config


@cli.command()
@click.argument("table_file", type=input_file)
@machine_option
def validate(table_file: Path, machine: bool) -> None:
    """Check that a table file holds a loop with identity 1."""
    with invalid_input_exits():
        loop = _read_loop(table_file)
    _emit(
        ReportDocument(
            subject=str(table_file), properties=[("valid", True), ("order", loop.order)]
        ),
        machine,
    )


@cli.command()
@click.argument("table_file", type=input_file)
@jobs_option
@machine_option
@click.pass_context
def props(ctx: click.Context, table_file: Path, jobs: int | None, machine: bool) -> None:
    """Report commutativity, IP, exponent 2, Steiner and Moufang properties.

    Exits 1 when any of them fails.
    """
    with invalid_input_exits():
        loop = _read_loop(table_file)
        report = property_report(loop, _scan_options(ctx, jobs))
    _emit(property_document(str(table_file), report), machine)
    ctx.exit(EXIT_OK if report.all_hold() else EXIT_PROPERTY_FAILED)


@cli.command()
@click.argument("table_file", type=input_file)
@click.argument("a", type=int)
@click.argument("b", type=int)
@click.argument("c", type=int)
@machine_option
@click.pass_context
def assoc(ctx: click.Context, table_file: Path, a: int, b: int, c: int, machine: bool) -> None:
    """Print the associator (A,B,C): the u with (A(BC))u = (AB)C.

    Exits 1 when the triple does not associate.
    """
    with invalid_input_exits():
        loop = _read_loop(table_file)
        u = associator(loop, a, b, c)
    _emit(
        ReportDocument(
            subject=str(table_file),
            properties=[("triple", f"({a},{b},{c})"), ("associator", u), ("associates", u == 1)],
        ),
        machine,
    )
    ctx.exit(EXIT_OK if u == 1 else EXIT_PROPERTY_FAILED)


@cli.command()
@click.argument("table_file", type=input_file)
@jobs_option
@click.option("--witness", is_flag=True, help="Print the failing and the refuting triple")
@click.option(
    "--deterministic",
    is_flag=True,
    help="Scan sequentially for the lexicographically first witness",
)
@click.option(
    "--all-witnesses", is_flag=True, help="List every associating triple that generates a non-group"
)
@machine_option
@click.pass_context
def mp(
    ctx: click.Context,
    table_file: Path,
    jobs: int | None,
    witness: bool,
    deterministic: bool,
    all_witnesses: bool,
    machine: bool,
) -> None:
    """Classify a loop as MOUFANG, MP or FAILS. Exits 1 on FAILS."""
    with invalid_input_exits():
        loop = _read_loop(table_file)
        options = _scan_options(ctx, jobs, deterministic)
        verdict = mp_status(loop, options)
        report = verdict_document(str(table_file), verdict, with_witness=witness)
        if all_witnesses and verdict.kind is MPKind.FAILS:
            theorem = moufang_theorem_verdict(loop, dataclasses.replace(options, exhaustive=True))
            report = ReportDocument(
                subject=report.subject,
                properties=[*report.properties, ("failing_triples", len(theorem.witnesses))],
                witnesses=[
                    *report.witnesses,
                    *(
                        ReportWitness(label="failing", tuples=[w.triple, w.refuting])
                        for w in theorem.witnesses
                    ),
                ],
            )
    _emit(report, machine)
    ctx.exit(EXIT_PROPERTY_FAILED if verdict.kind is MPKind.FAILS else EXIT_OK)


@cli.command()
@click.argument("n", type=int)
@click.option("--sts", "as_sts", is_flag=True, help="Write the Bose STS(3n) instead of the loop")
@out_option
@machine_option
def bose(n: int, as_sts: bool, out: Path | None, machine: bool) -> None:
    """Build the Bose Steiner loop of order 3N+1 (N odd, at least 3)."""
    with invalid_input_exits():
        params = BoseParams(n=n)
        properties: list[tuple[str, str | int | bool]] = [
            ("n", n),
            ("order", params.loop_order),
            ("criterion", mp_criterion(params)),
        ]
        if as_sts:
            sts = bose_sts(params)
            artifact = write_sts(sts)
            properties += [("points", sts.points), ("blocks", len(sts.blocks))]
        else:
            artifact = write_loop(bose_loop(params))
        if out is not None:
            properties.append(("written", str(out)))
        report = ReportDocument(subject=f"bose n={n}", properties=properties)
        _deliver(artifact, report, out, machine)


@cli.command()
@click.argument("direction", type=click.Choice(["sts2loop", "loop2sts"]))
@click.argument("in_file", type=input_file)
@out_option
@machine_option
def convert(direction: str, in_file: Path, out: Path | None, machine: bool) -> None:
    """Convert between a Steiner triple system and its Steiner loop."""
    with invalid_input_exits():
        text = in_file.read_text(encoding="utf-8")
        if direction == "sts2loop":
            loop = sts_to_loop(parse_sts(text))
            artifact = write_loop(loop)
            properties: list[tuple[str, str | int | bool]] = [("order", loop.order)]
        else:
            sts = loop_to_sts(parse_loop(text))
            artifact = write_sts(sts)
            properties = [("points", sts.points), ("blocks", len(sts.blocks))]
        report = ReportDocument(subject=str(in_file), properties=properties)
        _deliver(artifact, report, out, machine)


@cli.command()
@click.argument("first_file", type=input_file)
@click.argument("second_file", type=input_file)
@out_option
@machine_option
def product(first_file: Path, second_file: Path, out: Path | None, machine: bool) -> None:
    """Write the direct product of two loops."""
    with invalid_input_exits():
        loop = direct_product(_read_loop(first_file), _read_loop(second_file))
    report = ReportDocument(
        subject=f"{first_file} x {second_file}", properties=[("order", loop.order)]
    )
    _deliver(write_loop(loop), report, out, machine)


@cli.command()
@click.argument("name")
@out_option
@machine_option
def named(name: str, out: Path | None, machine: bool) -> None:
    """Write a small named group table: c<m>, s<m> (m <= 6) or klein."""
    with invalid_input_exits():
        loop = by_name(name)
    report = ReportDocument(subject=name, properties=[("order", loop.order)])
    _deliver(write_loop(loop), report, out, machine)


@cli.command()
@click.option("--min-n", type=int, default=3, show_default=True, help="Smallest Bose parameter")
@click.option("--max-n", type=int, default=51, show_default=True, help="Largest Bose parameter")
@jobs_option
@machine_option
@click.pass_context
def experiment(
    ctx: click.Context, min_n: int, max_n: int, jobs: int | None, machine: bool
) -> None:
    """Compare "MP iff gcd(n,7) = 1" with brute force for odd n in [MIN_N, MAX_N].

    Orders are always 3n+1. The published order 79 is listed among the MP
    orders but no Bose loop has that order (79 = 1 mod 6); it is reported as
    unreachable. Exits 0 iff every row agrees.
    """
    with invalid_input_exits():
        options = _scan_options(ctx, jobs)
        rows = run_experiment(min_n, max_n, options)
        click.echo(_experiment_line(_EXPERIMENT_COLUMNS, machine))
        all_agree = True
        count = 0
        for row in rows:
            count += 1
            all_agree = all_agree and row.agree
            click.echo(_experiment_line(_experiment_fields(row), machine))
    unreachable = ",".join(str(order) for order in unreachable_published_orders())
    _emit(
        ReportDocument(
            properties=[
                ("rows", count),
                ("all_agree", all_agree),
                ("unreachable_published_orders", unreachable or "-"),
            ]
        ),
        machine,
    )
    ctx.exit(EXIT_OK if all_agree else EXIT_PROPERTY_FAILED)


if __name__ == "__main__":
    cli()
