#!/usr/bin/env python3
"""Tests for bastree - the SVG figure of a result document."""

from __future__ import annotations

from bastree.builder import build_tree_from_path
from bastree.document import result_to_document
from bastree.matching import PathInstance
from bastree.schema import _DocDictT
from bastree.svg import render_svg
from bastree.verify import verify_result


def _doc(coords: list[tuple[float, float]]) -> _DocDictT:
    path = PathInstance.from_coords(coords)
    result = build_tree_from_path(path)
    return result_to_document(path, result, verify_result(path, result))


def test_render_svg_c4() -> None:
    svg = render_svg(_doc([(0, 0), (1, 0), (3, 0), (4, 0)]))

    assert svg.startswith("<?xml")
    assert svg.rstrip().endswith("</svg>")

    assert svg.count("<line ") == 3
    assert svg.count('class="matching"') == 2
    assert svg.count('class="connector"') == 1
    assert svg.count('class="cone"') == 4
    assert svg.count('class="vertex"') == 4


def test_render_svg_n2() -> None:
    svg = render_svg(_doc([(0, 0), (1, 1)]))

    assert svg.count("<line ") == 1
    assert svg.count('class="cone"') == 2


def test_render_svg_deterministic() -> None:
    doc = _doc([(0, 0), (0, 1), (1, 1), (1, 0)])

    assert render_svg(doc) == render_svg(doc)
    assert "nan" not in render_svg(doc)
