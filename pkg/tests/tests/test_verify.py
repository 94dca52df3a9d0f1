#!/usr/bin/env python3
"""Tests for bastree - the verifier, against good trees and deliberately broken ones."""

from __future__ import annotations

import math
from dataclasses import replace

from bastree.builder import BastResult, build_tree_from_path
from bastree.const import ConeKind
from bastree.matching import PathInstance
from bastree.orientation import VertexOrientation
from bastree.verify import (
    CHECK_ANGLE,
    CHECK_CONNECTED,
    CHECK_HOPS,
    CHECK_MST_BOUND,
    CHECK_PATH_BOUND,
    CHECK_TRANSMISSION,
    CHECK_TREE,
    CHECK_WEIGHT,
    hop_distance,
    hop_distance_ok,
    verify_result,
)

C4_PRIME = PathInstance.from_coords([(0, 0), (1, 0), (3, 0), (4, 0)])


def _c4() -> BastResult:
    return build_tree_from_path(C4_PRIME)


def test_verify_c4() -> None:
    """Test the tree of C4′ passes every check, with the expected slack."""

    report = verify_result(C4_PRIME, _c4(), mst_weight=4.0, connectivity=True)

    assert report.passed
    assert report.failed() == []
    for name in (
        CHECK_TREE,
        CHECK_ANGLE,
        CHECK_TRANSMISSION,
        CHECK_WEIGHT,
        CHECK_PATH_BOUND,
        CHECK_HOPS,
        CHECK_MST_BOUND,
        CHECK_CONNECTED,
    ):
        assert name in report

    assert report[CHECK_PATH_BOUND].slack == 2.0  # 2 x 4 - 6
    assert report[CHECK_MST_BOUND].slack == 10.0  # 4 x 4 - 6
    assert report[CHECK_ANGLE].slack == 2 * math.pi / 3


def test_verify_optional_checks() -> None:
    report = verify_result(C4_PRIME, _c4())

    assert CHECK_MST_BOUND not in report
    assert CHECK_CONNECTED not in report


def test_verify_not_a_tree() -> None:
    result = _c4()

    dropped = replace(result, edges=result.edges[:2])
    report = verify_result(C4_PRIME, dropped)
    assert not report[CHECK_TREE].passed
    assert not report[CHECK_HOPS].passed

    cycle = replace(result, edges=(*result.edges[:2], (0, 2), (1, 3)))
    assert not verify_result(C4_PRIME, cycle)[CHECK_TREE].passed

    out_of_range = replace(result, edges=(*result.edges[:2], (0, 7)))
    assert not verify_result(C4_PRIME, out_of_range)[CHECK_TREE].passed


def test_verify_cones() -> None:
    """Test a cone turned away from its tree edges is reported, with the edge."""

    result = _c4()
    orientations = list(result.orientations)
    orientations[3] = VertexOrientation(ConeKind.CENTER, 2, 0.0)

    report = verify_result(C4_PRIME, replace(result, orientations=tuple(orientations)))

    assert not report.passed
    assert report[CHECK_TRANSMISSION].witnesses == ((2, 3), (0, 3))
    assert report[CHECK_TREE].passed

    missing = replace(result, orientations=result.orientations[:3])
    assert not verify_result(C4_PRIME, missing)[CHECK_TRANSMISSION].passed


def test_verify_weights() -> None:
    result = _c4()

    report = verify_result(C4_PRIME, replace(result, weight=5.0))
    assert not report[CHECK_WEIGHT].passed

    report = verify_result(C4_PRIME, result, mst_weight=1.0)
    assert not report[CHECK_MST_BOUND].passed
    assert report[CHECK_MST_BOUND].slack == -2.0


def test_verify_path_bound() -> None:
    """Test a spanning tree heavier than twice the path is caught."""

    path = PathInstance.from_coords([(0, 0), (1, 0), (2, 0), (3, 0)])
    result = build_tree_from_path(path)

    heavy = replace(result, edges=((0, 3), (1, 3), (0, 2)), weight=7.0)
    report = verify_result(path, heavy)

    assert not report[CHECK_PATH_BOUND].passed
    assert report[CHECK_PATH_BOUND].slack == -1.0  # 2 x 3 - 7
    assert report[CHECK_WEIGHT].passed


def test_verify_angle_span() -> None:
    """Test a vertex whose tree edges span more than 2π/3 is reported."""

    path = PathInstance.from_coords([(0, 0), (1, 0), (-1, 0)])
    result = build_tree_from_path(path)

    straight = replace(result, edges=((0, 1), (0, 2)), weight=2.0)
    report = verify_result(path, straight)

    assert report[CHECK_ANGLE].witnesses == (0,)
    assert report[CHECK_ANGLE].slack < 0.0


def test_verify_hops() -> None:
    """Test a path edge whose endpoints are more than 3 hops apart is reported."""

    path = PathInstance.from_coords([(0, 0), (1, 0), (2, 0), (3, 0), (4, 0)])
    result = build_tree_from_path(path)

    snake = replace(result, edges=((0, 2), (2, 3), (3, 4), (1, 4)))
    report = verify_result(path, snake)

    assert report[CHECK_HOPS].witnesses == ((0, 1),)
    assert report[CHECK_TREE].passed


def test_hop_distance() -> None:
    edges = [(0, 2), (2, 3), (3, 4), (1, 4)]

    assert hop_distance(edges, 0, 1, 4) == 4
    assert hop_distance(edges, 0, 1, 3) is None
    assert hop_distance(edges, 0, 9, 3) is None
    assert hop_distance_ok(edges, 3, 4, 1)
    assert not hop_distance_ok(edges, 0, 4, 2)
