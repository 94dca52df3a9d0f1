#!/usr/bin/env python3
"""Tests for bastree - the planar primitives (directions, regions, cones, spans)."""

from __future__ import annotations

import math
from typing import get_type_hints

import numpy as np
import pytest

from bastree import exceptions as exc
from bastree.const import HALF_ANGLE, ConeKind, RegionId
from bastree.geom import (
    Cone,
    Point,
    angular_distance,
    angular_span,
    as_points,
    basic_bisector,
    basic_cone,
    can_cover,
    classify_region,
    coincident,
    cone_contains,
    covering_kinds,
    direction,
    mutual_edge_possible,
    normalize,
)

U, V = Point(0.0, 0.0), Point(1.0, 0.0)

DEPTH = 1e-6  # how far inside its region a sampled point must be


def test_direction() -> None:
    """Test the bearing of a ray, normalized to [0, 2π)."""

    assert direction(U, V) == 0.0
    assert direction(U, Point(0.0, 1.0)) == pytest.approx(math.pi / 2)
    assert direction(V, U) == pytest.approx(math.pi)
    assert direction(U, Point(0.0, -1.0)) == pytest.approx(3 * math.pi / 2)

    with pytest.raises(exc.CoincidentPoints):
        direction(V, Point(1.0, 0.0))

    # a few ulps apart, there is no bearing either
    with pytest.raises(exc.CoincidentPoints):
        direction(V, Point(math.nextafter(1.0, 2.0), 0.0))


def test_normalize() -> None:
    assert normalize(2 * math.pi) == 0.0
    assert normalize(-0.1) == pytest.approx(2 * math.pi - 0.1)
    assert normalize(7 * math.pi) == pytest.approx(math.pi)
    assert 0.0 <= normalize(-1e-18) < 2 * math.pi

    assert angular_distance(0.1, 2 * math.pi - 0.1) == pytest.approx(0.2)
    assert angular_distance(0.0, math.pi) == pytest.approx(math.pi)


def test_as_points() -> None:
    assert as_points([(0, 1), (2.5, 3)]) == [Point(0.0, 1.0), Point(2.5, 3.0)]

    with pytest.raises(exc.InvalidParameter):
        as_points([(0.0, 0.0), (math.nan, 1.0)])
    with pytest.raises(exc.InvalidParameter):
        as_points([(math.inf, 0.0)])


def test_classify_region() -> None:
    """Test the four regions of the partition induced by a segment."""

    assert classify_region(U, V, Point(3.0, 0.0)) == RegionId.R3
    assert classify_region(U, V, Point(-2.0, 0.0)) == RegionId.R1
    assert classify_region(U, V, Point(0.5, 5.0)) == RegionId.R2
    assert classify_region(U, V, Point(0.5, -5.0)) == RegionId.R4

    # the open segment belongs to R2, the wedges are closed
    assert classify_region(U, V, Point(0.5, 0.0)) == RegionId.R2
    assert classify_region(U, V, Point(-1.0, math.sqrt(3.0))) == RegionId.R1
    assert classify_region(U, V, Point(2.0, -math.sqrt(3.0))) == RegionId.R3

    # just outside the wedge at u
    assert classify_region(U, V, Point(-1.0, 1.8)) == RegionId.R2


def test_classify_region_errors() -> None:
    with pytest.raises(exc.DuplicatePoint):
        classify_region(U, V, Point(0.0, 0.0))
    with pytest.raises(exc.DuplicatePoint):
        classify_region(U, V, V)
    with pytest.raises(exc.DuplicatePoint):
        classify_region(U, V, Point(1.0, math.ulp(0.0)))
    with pytest.raises(exc.ApexQuery):
        can_cover(V, U, Point(math.nextafter(1.0, 0.0), 0.0))
    with pytest.raises(exc.DegenerateSegment):
        classify_region(U, Point(0.0, 0.0), V)

    # both are CoincidentPoints
    with pytest.raises(exc.CoincidentPoints):
        classify_region(U, U, V)


def test_classify_region_symmetry() -> None:
    """Test that R1 of (u, v) is R3 of (v, u), and R2 of (u, v) is R4 of (v, u)."""

    rng = np.random.default_rng(20240420)

    for u, v, q in rng.uniform(-10.0, 10.0, size=(2_000, 3, 2)):
        u, v, q = Point(*u), Point(*v), Point(*q)

        region = classify_region(u, v, q)
        assert classify_region(v, u, q) == region.flip()


def test_basic_cone() -> None:
    """Test the bisectors of the three basic cones, and that each contains v."""

    assert basic_cone(U, V, ConeKind.CENTER).bisector == 0.0
    assert basic_cone(U, V, ConeKind.UP).bisector == pytest.approx(math.pi / 3)
    assert basic_cone(U, V, ConeKind.DOWN).bisector == pytest.approx(5 * math.pi / 3)

    assert basic_bisector(math.pi, ConeKind.UP) == pytest.approx(4 * math.pi / 3)

    for kind in ConeKind:
        assert basic_cone(U, V, kind).contains(V)

    with pytest.raises(exc.DegenerateSegment):
        basic_cone(U, U, ConeKind.CENTER)


def test_basic_cone_contains_its_region() -> None:
    """Test each basic cone contains all of its region, and a rotated cone does not.

    Center contains R3, up contains R2 and down contains R4.
    """

    rng = np.random.default_rng(1)
    samples = [Point(*q) for q in rng.uniform(-5.0, 5.0, size=(5_000, 2))]

    # the extreme directions of each region, as seen from u
    extremes = {
        RegionId.R2: [Point(0.5, 1e-6), U.offset(2 * math.pi / 3 - 1e-5, 1.0)],
        RegionId.R3: [
            V.offset(HALF_ANGLE - 1e-5, 1e4),
            V.offset(-HALF_ANGLE + 1e-5, 1e4),
        ],
        RegionId.R4: [Point(0.5, -1e-6), U.offset(4 * math.pi / 3 + 1e-5, 1.0)],
    }
    regions = {
        ConeKind.CENTER: RegionId.R3,
        ConeKind.UP: RegionId.R2,
        ConeKind.DOWN: RegionId.R4,
    }

    for kind, region in regions.items():
        assert all(classify_region(U, V, q) == region for q in extremes[region])

        inside = [q for q in samples if classify_region(U, V, q) == region]
        inside += extremes[region]
        cone = basic_cone(U, V, kind)

        assert all(cone.contains(q) for q in inside)

        for delta in (-1e-3, 1e-3):
            rotated = Cone(U, normalize(cone.bisector + delta))
            assert not all(rotated.contains(q) for q in inside)


def test_cone_contains() -> None:
    cone = Cone(U, 0.0)

    assert cone_contains(cone, Point(5.0, 0.0))
    assert not cone_contains(cone, Point(-1.0, 0.0))
    assert cone_contains(cone, U.offset(HALF_ANGLE, 2.0))  # on the boundary
    assert not cone_contains(cone, U.offset(HALF_ANGLE + 1e-6, 2.0))

    with pytest.raises(exc.ApexQuery):
        cone_contains(cone, U)


def test_can_cover() -> None:
    """Test the union of the three basic cones: all but the open wedge of R1."""

    assert not can_cover(V, U, Point(3.0, 0.0))
    assert can_cover(U, V, Point(3.0, 0.0))
    assert can_cover(U, V, V)

    assert not can_cover(U, V, Point(-1.0, 0.0))
    assert can_cover(U, V, Point(-1.0, 2.0))  # outside the wedge, at ~63.4°
    assert can_cover(U, V, Point(0.0, 1.0))

    with pytest.raises(exc.ApexQuery):
        can_cover(U, V, U)


def test_covering_kinds() -> None:
    assert covering_kinds(U, V, V) == [ConeKind.CENTER, ConeKind.UP, ConeKind.DOWN]
    assert covering_kinds(U, V, Point(0.0, 1.0)) == [ConeKind.UP]
    assert covering_kinds(U, V, Point(0.0, -1.0)) == [ConeKind.DOWN]
    assert covering_kinds(U, V, Point(-1.0, 0.0)) == []


def test_mutual_edge_possible() -> None:
    # the outer ends of two collinear edges can face each other
    assert mutual_edge_possible(U, V, Point(4.0, 0.0), Point(3.0, 0.0))

    # the inner ends cannot: each lies behind the other
    assert not mutual_edge_possible(V, U, Point(3.0, 0.0), Point(4.0, 0.0))

    with pytest.raises(exc.CoincidentPoints):
        mutual_edge_possible(U, V, U, V)


def test_angular_span() -> None:
    """Test the smallest angle spanned by a set of directions."""

    assert angular_span([0.0]) == 0.0
    assert angular_span([0.0, math.radians(100)]) == pytest.approx(math.radians(100))
    assert angular_span([0.0, 2 * math.pi / 3, 4 * math.pi / 3]) == pytest.approx(
        4 * math.pi / 3
    )

    # the span wraps across 0
    assert angular_span([0.1, 2 * math.pi - 0.1]) == pytest.approx(0.2)
    assert angular_span([1.0, 1.0]) == 0.0

    with pytest.raises(exc.EmptyInput):
        angular_span([])


def test_angular_span_invariance() -> None:
    """Test the span ignores the order of the directions, and a common rotation."""

    rng = np.random.default_rng(31)

    for _ in range(2_000):
        dirs = list(rng.uniform(0.0, 2 * math.pi, size=int(rng.integers(1, 7))))
        span = angular_span(dirs)

        assert angular_span(list(rng.permutation(dirs))) == pytest.approx(span, abs=1e-9)

        shift = float(rng.uniform(-10.0, 10.0))
        assert angular_span([d + shift for d in dirs]) == pytest.approx(span, abs=1e-9)


def test_region_flip() -> None:
    """Test each region's id once the endpoints swap, and the method's annotation."""

    assert [r.flip() for r in RegionId] == [
        RegionId.R3,
        RegionId.R4,
        RegionId.R1,
        RegionId.R2,
    ]
    assert get_type_hints(RegionId.flip)["return"] is RegionId


def test_coincident() -> None:
    big = Point(1e6, -1e6)

    assert coincident(U, Point(0.0, 0.0))
    assert coincident(big, Point(1e6 + 1e-10, -1e6))
    assert not coincident(big, Point(1e6 + 1e-6, -1e6))
    assert not coincident(U, Point(1e-14, 0.0))

    with pytest.raises(exc.CoincidentPoints):
        mutual_edge_possible(big, U, Point(1e6, -1e6 - 1e-10), V)


def _deep_in(u: Point, v: Point, q: Point, region: RegionId) -> bool:
    """Return True if q, and q moved 1e-6 along either axis, are all in the region."""

    return all(
        classify_region(u, v, Point(q.x + dx, q.y + dy)) == region
        for dx, dy in ((0.0, 0.0), (DEPTH, 0.0), (-DEPTH, 0.0), (0.0, DEPTH), (0.0, -DEPTH))
    )


def test_can_cover_complement() -> None:
    """Test a point is covered unless it lies in R1 of (a, partner), never if deep in it."""

    rng = np.random.default_rng(11)
    hits = {True: 0, False: 0}

    for a, partner, q in rng.uniform(-5.0, 5.0, size=(5_000, 3, 2)):
        a, partner, q = Point(*a), Point(*partner), Point(*q)
        covered = can_cover(a, partner, q)

        if classify_region(a, partner, q) != RegionId.R1:
            assert covered
        elif _deep_in(a, partner, q, RegionId.R1):
            assert not covered
        hits[covered] += 1

    assert hits[True] and hits[False]


def _side_and_center(
    rng: np.random.Generator,
) -> tuple[Point, Point, Point, Point] | None:
    """Return (u, v, x, y), x deep in R3 of (u, v) and y deep in a center region."""

    u, v = Point(*rng.uniform(-1.0, 1.0, 2)), Point(*rng.uniform(-1.0, 1.0, 2))
    theta = direction(u, v)

    x = v.offset(theta + rng.uniform(-HALF_ANGLE, HALF_ANGLE), rng.uniform(0.0, 3.0))
    y = Point(*(np.asarray(v) + rng.uniform(-3.0, 3.0, 2)))

    if not _deep_in(u, v, x, RegionId.R3):
        return None
    if not (_deep_in(u, v, y, RegionId.R2) or _deep_in(u, v, y, RegionId.R4)):
        return None
    return u, v, x, y


@pytest.mark.parametrize(
    "samples", [5_000, pytest.param(100_000, marks=pytest.mark.slow)]
)
def test_opposite_sides_are_central(samples: int) -> None:
    """Test that if x and y lie in opposite side regions of (u, v), both u and v lie
    in center regions of (x, y).
    """

    rng = np.random.default_rng(1324)
    center = (RegionId.R2, RegionId.R4)

    for _ in range(samples):
        u, v = Point(*rng.uniform(-1.0, 1.0, 2)), Point(*rng.uniform(-1.0, 1.0, 2))
        theta = direction(u, v)

        turn = rng.uniform(-HALF_ANGLE, HALF_ANGLE, 2)
        x = u.offset(theta + math.pi + turn[0], rng.uniform(0.0, 3.0))
        y = v.offset(theta + turn[1], rng.uniform(0.0, 3.0))
        if not (_deep_in(u, v, x, RegionId.R1) and _deep_in(u, v, y, RegionId.R3)):
            continue

        assert classify_region(x, y, u) in center, f"{u}, {v}, {x}, {y}"
        assert classify_region(x, y, v) in center, f"{u}, {v}, {x}, {y}"


@pytest.mark.parametrize(
    "samples", [5_000, pytest.param(100_000, marks=pytest.mark.slow)]
)
def test_side_region_of_x_takes_both(samples: int) -> None:
    """Test that if u lies in the side region of (x, y) at x, then so does v.

    Here x lies in the side region of (u, v) at v, and y in one of its center regions.
    """

    rng = np.random.default_rng(23)
    hits = 0

    for _ in range(samples):
        if (quad := _side_and_center(rng)) is None:
            continue
        u, v, x, y = quad

        if _deep_in(x, y, u, RegionId.R1):
            assert classify_region(x, y, v) == RegionId.R1, f"{u}, {v}, {x}, {y}"
            hits += 1

    assert hits


@pytest.mark.parametrize(
    "samples", [5_000, pytest.param(100_000, marks=pytest.mark.slow)]
)
def test_side_region_of_y_takes_both(samples: int) -> None:
    """Test that if v lies in the side region of (x, y) at y, then so does u.

    Here x lies in the side region of (u, v) at v, and y in one of its center regions.
    """

    rng = np.random.default_rng(32)
    hits = 0

    for _ in range(samples):
        if (quad := _side_and_center(rng)) is None:
            continue
        u, v, x, y = quad

        if _deep_in(x, y, v, RegionId.R3):
            assert classify_region(x, y, u) == RegionId.R3, f"{u}, {v}, {x}, {y}"
            hits += 1

    assert hits
