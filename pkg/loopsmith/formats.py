"""Text formats for Cayley tables, block lists and reports.

Table file:
    # optional comment lines
    k
    k lines of k whitespace-separated 1-based entries

Block-list file:
    # optional comment lines
    v
    one block per line, three 1-based point labels

Input accepts "\\n" and "\\r\\n" line endings, blank lines and comment lines
starting with '#'. Output is canonical: single spaces, "\\n" endings, no
comments, blocks sorted.
"""

from __future__ import annotations

from collections.abc import Iterator
from enum import Enum

from .core.loop import LoopTable, validate_table
from .core.sts import TripleSystem, validate_sts
from .errors import FormatError
from .schemas import MPVerdict, PropertyReport, ReportDocument, ReportWitness


class ReportMode(str, Enum):
    """Rendering mode of `write_report`."""

    TEXT = "text"
    MACHINE = "machine"


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for number, line in enumerate(text.replace("\r\n", "\n").split("\n"), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield number, stripped.split()


def _int_token(token: str, line: int) -> int:
    digits = token[1:] if token.startswith("-") else token
    if not (digits.isascii() and digits.isdigit()):
        raise FormatError(line, f"expected an integer, got {token!r}")
    return int(token)


def _header(lines: Iterator[tuple[int, list[str]]], what: str) -> tuple[int, int]:
    entry = next(lines, None)
    if entry is None:
        raise FormatError(1, f"missing {what} line")
    number, tokens = entry
    if len(tokens) != 1:
        raise FormatError(number, f"the {what} line must hold a single integer")
    value = _int_token(tokens[0], number)
    if value < 1:
        raise FormatError(number, f"{what} must be positive, got {value}")
    return number, value


def parse_loop(text: str) -> LoopTable:
    """Parse a table file.

    Raises:
        FormatError: SYNTAX with the offending line number
        TableError: any `validate_table` error
    """
    lines = _content_lines(text)
    number, k = _header(lines, "order")
    rows: list[list[int]] = []
    for number, tokens in lines:
        if len(rows) == k:
            raise FormatError(number, f"unexpected content after {k} table rows")
        if len(tokens) != k:
            raise FormatError(number, f"expected {k} entries, found {len(tokens)}")
        rows.append([_int_token(token, number) for token in tokens])
    if len(rows) < k:
        raise FormatError(number + 1, f"expected {k} table rows, found {len(rows)}")
    return validate_table(rows)


def write_loop(loop: LoopTable) -> str:
    """Render a table in canonical form."""
    body = "".join(" ".join(str(v) for v in row) + "\n" for row in loop.rows())
    return f"{loop.order}\n{body}"


def parse_sts(text: str) -> TripleSystem:
    """Parse a block-list file.

    Raises:
        FormatError: SYNTAX with the offending line number
        TripleSystemError: any `validate_sts` error
    """
    lines = _content_lines(text)
    _, v = _header(lines, "point count")
    blocks: list[tuple[int, ...]] = []
    for number, tokens in lines:
        if len(tokens) != 3:
            raise FormatError(number, f"a block needs 3 points, found {len(tokens)}")
        blocks.append(tuple(_int_token(token, number) for token in tokens))
    return validate_sts(v, blocks)


def write_sts(sts: TripleSystem) -> str:
    """Render a triple system in canonical form."""
    body = "".join(f"{a} {b} {c}\n" for a, b, c in sts.blocks)
    return f"{sts.points}\n{body}"


def _render_value(value: str | int | bool) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def write_report(report: ReportDocument, mode: ReportMode = ReportMode.TEXT) -> str:
    """Render a report.

    TEXT: "key = value" lines, then "witness <label>: (e1,e2,...)" lines.
    MACHINE: "key<TAB>value" lines, then "witness<TAB>label<TAB>e1,e2,..." lines.
    """
    lines: list[str] = []
    if mode is ReportMode.TEXT:
        if report.subject:
            lines.append(f"subject = {report.subject}")
        lines.extend(f"{key} = {_render_value(value)}" for key, value in report.properties)
        for witness in report.witnesses:
            tuples = " ".join("(" + ",".join(map(str, t)) + ")" for t in witness.tuples)
            lines.append(f"witness {witness.label}: {tuples}")
    else:
        if report.subject:
            lines.append(f"subject\t{report.subject}")
        lines.extend(f"{key}\t{_render_value(value)}" for key, value in report.properties)
        for witness in report.witnesses:
            fields = [",".join(map(str, t)) for t in witness.tuples]
            lines.append("\t".join(["witness", witness.label, *fields]))
    return "".join(line + "\n" for line in lines)


def property_document(subject: str, report: PropertyReport) -> ReportDocument:
    """Report of every loop predicate, with witnesses for the failed ones."""
    names = ["is_commutative", "has_ip", "exponent_two", "is_steiner", "is_moufang"]
    return ReportDocument(
        subject=subject,
        properties=[("order", report.order), *((name, getattr(report, name)) for name in names)],
        witnesses=[
            ReportWitness(label=name, tuples=[report.witnesses[name]])
            for name in names
            if name in report.witnesses
        ],
    )


def verdict_document(subject: str, verdict: MPVerdict, with_witness: bool) -> ReportDocument:
    """Report of an MP classification."""
    witnesses: list[ReportWitness] = []
    if with_witness and verdict.witness is not None:
        witnesses.append(
            ReportWitness(label="mp", tuples=[verdict.witness.triple, verdict.witness.refuting])
        )
    if with_witness and verdict.moufang_witness is not None:
        witnesses.append(ReportWitness(label="moufang", tuples=[verdict.moufang_witness]))
    return ReportDocument(
        subject=subject,
        properties=[
            ("order", verdict.order),
            ("mp_status", verdict.kind.value),
            ("deterministic", verdict.deterministic),
        ],
        witnesses=witnesses,
    )
