#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
"""Reads point files, and writes (and reads back) the result documents.

A text point file has one point per line, as two whitespace-separated decimals; a
line starting with '#' is a comment. A JSON point file is an array of [x, y] pairs.
Floats are written with repr(), so every document round-trips at full precision.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Sequence
from typing import TYPE_CHECKING, Any

import voluptuous as vol

from . import exceptions as exc
from .const import InputFormat, SourceKind
from .geom import Point, as_points
from .schema.const import (
    SZ_ALPHA,
    SZ_BISECTOR,
    SZ_CHECKS,
    SZ_COMPARISON,
    SZ_CONDITION,
    SZ_CONNECTORS,
    SZ_COUNTERS,
    SZ_DUE_EDGE,
    SZ_EDGES,
    SZ_EXAMINATIONS,
    SZ_EXAMINED,
    SZ_FEASIBLE,
    SZ_KIND,
    SZ_MATCHING,
    SZ_MATCHING_EDGES,
    SZ_MST,
    SZ_NAME,
    SZ_OPTIMAL_WEIGHT,
    SZ_ORIENTATIONS,
    SZ_PARTNER,
    SZ_PASSED,
    SZ_PATH,
    SZ_PHASE,
    SZ_PHASE1,
    SZ_PHASE2,
    SZ_PHASE2_ROUNDS,
    SZ_PHASE3,
    SZ_POINTS,
    SZ_RATIO,
    SZ_RATIOS,
    SZ_SCENARIO,
    SZ_SLACK,
    SZ_SOURCE,
    SZ_TRACE,
    SZ_TREE,
    SZ_TREE_EDGES,
    SZ_TREE_MST,
    SZ_TREE_PATH,
    SZ_TREE_WEIGHT,
    SZ_VERIFICATION,
    SZ_VERTEX,
    SZ_WEIGHTS,
    SZ_WITNESSES,
)
from .schema.document import SCH_ORACLE_DOCUMENT, SCH_OUTPUT_DOCUMENT, SCH_POINTS_JSON

if TYPE_CHECKING:
    from .builder import BastResult
    from .matching import PathInstance
    from .oracle import OracleResult
    from .schema import _DocDictT
    from .verify import VerificationReport


_LOGGER = logging.getLogger(__name__)

COMMENT_CHAR = "#"


def parse_points_text(text: str) -> list[Point]:
    """Parse a text point file."""

    coords: list[tuple[float, float]] = []

    for num, line in enumerate(text.splitlines(), start=1):
        if not (line := line.strip()) or line.startswith(COMMENT_CHAR):
            continue

        fields = line.split()
        if len(fields) != 2:
            raise exc.InvalidSchema(f"Line {num}: expected 2 numbers, got: {line!r}")
        try:
            coords.append((float(fields[0]), float(fields[1])))
        except ValueError as err:
            raise exc.InvalidSchema(f"Line {num}: {err}") from err

    if not coords:
        raise exc.InvalidSchema("The point file has no points")

    try:
        return as_points(coords)
    except exc.InvalidParameter as err:
        raise exc.InvalidSchema(err.message) from err


def parse_points_json(text: str) -> list[Point]:
    """Parse a JSON point file."""

    try:
        data = SCH_POINTS_JSON(json.loads(text))
    except (json.JSONDecodeError, vol.Invalid) as err:
        raise exc.InvalidSchema(f"Not a valid point file: {err}") from err
    return as_points(data)


def parse_points(text: str, fmt: InputFormat = InputFormat.TEXT) -> list[Point]:
    if fmt == InputFormat.JSON:
        return parse_points_json(text)
    return parse_points_text(text)


def format_points(
    points: Sequence[Point], fmt: InputFormat = InputFormat.TEXT, comment: str = ""
) -> str:
    """Return a point file (text or JSON) for the points."""

    if fmt == InputFormat.JSON:
        return json.dumps([[p.x, p.y] for p in points]) + "\n"

    header = [f"{COMMENT_CHAR} {line}" for line in comment.splitlines()]
    return "\n".join([*header, *(f"{p.x!r} {p.y!r}" for p in points)]) + "\n"


def _witness(value: Any) -> Any:
    if isinstance(value, tuple | list):
        return [int(v) for v in value]
    return value


def report_to_dict(report: VerificationReport) -> _DocDictT:
    return {
        SZ_PASSED: report.passed,
        SZ_CHECKS: [
            {
                SZ_NAME: c.name,
                SZ_PASSED: c.passed,
                SZ_WITNESSES: [_witness(w) for w in c.witnesses],
                SZ_SLACK: c.slack,
            }
            for c in report.checks
        ],
    }


def result_to_document(
    path: PathInstance,
    result: BastResult,
    report: VerificationReport,
    /,
    *,
    source: SourceKind = SourceKind.PATH,
    order: Sequence[int] | None = None,
    mst_weight: float | None = None,
    trace: bool = False,
    counters: bool = False,
) -> _DocDictT:
    """Return the output document of a build (in the path's vertex order)."""

    doc: _DocDictT = {
        SZ_SOURCE: str(source),
        SZ_MATCHING: str(result.choice),
        SZ_POINTS: [[p.x, p.y] for p in path.points],
        SZ_PATH: list(order) if order is not None else list(range(len(path))),
        SZ_TREE_EDGES: [list(e) for e in result.edges],
        SZ_MATCHING_EDGES: [list(e) for e in result.matching],
        SZ_CONNECTORS: [list(e) for e in result.connectors],
        SZ_ORIENTATIONS: [
            {SZ_KIND: str(o.kind), SZ_BISECTOR: o.bisector, SZ_PARTNER: o.partner}
            for o in result.orientations
        ],
        SZ_WEIGHTS: {
            SZ_PATH: result.path_weight,
            SZ_MST: mst_weight,
            SZ_TREE: result.weight,
        },
        SZ_RATIOS: {
            SZ_TREE_PATH: result.weight / result.path_weight,
            SZ_TREE_MST: None if mst_weight is None else result.weight / mst_weight,
        },
        SZ_VERIFICATION: report_to_dict(report),
    }

    if trace:
        doc[SZ_TRACE] = [
            {
                SZ_PHASE: str(t.phase),
                SZ_VERTEX: t.vertex,
                SZ_KIND: str(t.kind),
                SZ_DUE_EDGE: t.due_edge,
                SZ_CONDITION: None if t.condition is None else str(t.condition),
                SZ_SCENARIO: None if t.scenario is None else str(t.scenario),
            }
            for t in result.trace
        ]

    if counters:
        doc[SZ_COUNTERS] = {
            SZ_PHASE1: result.counters.phase1,
            SZ_PHASE2: result.counters.phase2,
            SZ_PHASE3: result.counters.phase3,
            SZ_PHASE2_ROUNDS: result.counters.phase2_rounds,
            SZ_EXAMINATIONS: result.counters.examinations,
        }

    return doc


def oracle_to_document(
    points: Sequence[Point],
    oracle: OracleResult,
    /,
    *,
    tree_weight: float | None = None,
) -> _DocDictT:
    """Return the output document of the oracle (with an optional comparison)."""

    doc: _DocDictT = {
        SZ_ALPHA: oracle.alpha,
        SZ_POINTS: [[p.x, p.y] for p in points],
        SZ_OPTIMAL_WEIGHT: oracle.weight,
        SZ_EDGES: [list(e) for e in oracle.edges],
        SZ_EXAMINED: oracle.examined,
        SZ_FEASIBLE: oracle.feasible,
    }

    if tree_weight is not None:
        doc[SZ_COMPARISON] = {
            SZ_TREE_WEIGHT: tree_weight,
            SZ_RATIO: tree_weight / oracle.weight if oracle.weight else 1.0,
        }

    return doc


def dump_document(doc: _DocDictT) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _load(text: str, schema: vol.Schema) -> _DocDictT:
    try:
        return schema(json.loads(text))  # type: ignore[no-any-return]
    except (json.JSONDecodeError, vol.Invalid) as err:
        raise exc.InvalidSchema(f"Not a valid document: {err}") from err


def load_document(text: str) -> _DocDictT:
    """Parse (and validate) an output document."""
    return _load(text, SCH_OUTPUT_DOCUMENT)


def load_oracle_document(text: str) -> _DocDictT:
    return _load(text, SCH_ORACLE_DOCUMENT)
