#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
"""Draws a result document as an SVG figure: the tree, and each vertex's cone."""

from __future__ import annotations

import math
from statistics import median
from typing import TYPE_CHECKING, Final

from .const import HALF_ANGLE, SVG_MARGIN_FACTOR, SVG_WEDGE_FACTOR
from .schema.const import (
    SZ_BISECTOR,
    SZ_MATCHING_EDGES,
    SZ_ORIENTATIONS,
    SZ_POINTS,
    SZ_TREE_EDGES,
)

if TYPE_CHECKING:
    from .schema import _DocDictT


STYLE: Final = """\
    line.matching { stroke: #1f4e9c; stroke-width: 2; }
    line.connector { stroke: #c0392b; stroke-width: 1.5; stroke-dasharray: 4 2; }
    path.cone { fill: #f1c40f; fill-opacity: 0.25; stroke: #b7950b; stroke-width: 0.5; }
    circle.vertex { fill: #000000; }"""


def _fmt(value: float) -> str:
    text = f"{value:.6f}".rstrip("0").rstrip(".")
    return "0" if text in ("", "-0") else text


def render_svg(doc: _DocDictT) -> str:
    """Return the figure of a (validated) output document.

    The y axis points up, as in the plane; the output depends only on the document.
    """

    points = [(x, -y) for x, y in doc[SZ_POINTS]]  # SVG's y axis points down
    edges = [tuple(e) for e in doc[SZ_TREE_EDGES]]
    matching = {tuple(sorted(e)) for e in doc[SZ_MATCHING_EDGES]}

    lengths = [math.dist(points[a], points[b]) for a, b in edges]
    radius = SVG_WEDGE_FACTOR * (median(lengths) if lengths else 1.0)

    xs = [x for x, _ in points]
    ys = [y for _, y in points]
    extent = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    margin = SVG_MARGIN_FACTOR * extent
    x0, y0 = min(xs) - margin, min(ys) - margin
    width, height = max(xs) - min(xs) + 2 * margin, max(ys) - min(ys) + 2 * margin
    dot = extent / 200.0

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(width)} {_fmt(height)}">',
        f"  <style>\n{STYLE}\n  </style>",
    ]

    for a, b in edges:
        style = "matching" if (min(a, b), max(a, b)) in matching else "connector"
        (xa, ya), (xb, yb) = points[a], points[b]
        lines.append(
            f'  <line class="{style}" x1="{_fmt(xa)}" y1="{_fmt(ya)}" '
            f'x2="{_fmt(xb)}" y2="{_fmt(yb)}"/>'
        )

    for (x, y), orientation in zip(points, doc[SZ_ORIENTATIONS], strict=True):
        theta = orientation[SZ_BISECTOR]
        lo, hi = theta - HALF_ANGLE, theta + HALF_ANGLE
        # the plane's counterclockwise is the SVG's negative-angle direction
        x1, y1 = x + radius * math.cos(lo), y - radius * math.sin(lo)
        x2, y2 = x + radius * math.cos(hi), y - radius * math.sin(hi)
        lines.append(
            f'  <path class="cone" d="M {_fmt(x)} {_fmt(y)} L {_fmt(x1)} {_fmt(y1)} '
            f'A {_fmt(radius)} {_fmt(radius)} 0 0 0 {_fmt(x2)} {_fmt(y2)} Z"/>'
        )

    for x, y in points:
        lines.append(
            f'  <circle class="vertex" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(dot)}"/>'
        )

    lines.append("</svg>")
    return "\n".join(lines) + "\n"
