#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
"""Planar primitives: directions, the four-region partition of a segment, cones.

Every angle is a float in radians; a Direction is always normalized to [0, 2π).

The partition of the plane induced by a directed segment (u, v), in the frame where
v - u points along +x:
  - R1 is the closed wedge with apex u, half-angle π/3, about the direction π
  - R3 is the closed wedge with apex v, half-angle π/3, about the direction 0
  - R2 is the rest of the plane strictly left of u->v (plus the open segment uv)
  - R4 is the rest of the plane strictly right of u->v

A cone is a closed 2π/3 sector. The three basic cones of u with respect to v are the
only cones at u that contain all of R3 (center), R2 (up) or R4 (down).
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Final, NamedTuple, TypeAlias

from . import exceptions as exc
from .const import (
    ANGLE_TOL,
    COINCIDENT_ULPS,
    HALF_ANGLE,
    TWO_PI,
    ConeKind,
    RegionId,
)

Direction: TypeAlias = float  # radians, 0 <= theta < 2π

_KIND_OFFSET: Final[dict[ConeKind, float]] = {
    ConeKind.CENTER: 0.0,
    ConeKind.UP: HALF_ANGLE,
    ConeKind.DOWN: -HALF_ANGLE,
}

# the order in which cone kinds are tried whenever there is a choice
KIND_PREFERENCE: Final = (ConeKind.CENTER, ConeKind.UP, ConeKind.DOWN)


class Point(NamedTuple):
    x: float
    y: float

    def __str__(self) -> str:
        return f"({self.x!r}, {self.y!r})"

    def offset(self, theta: Direction, dist: float) -> Point:
        """Return the point at distance dist from this one, in direction theta."""
        return Point(self.x + dist * math.cos(theta), self.y + dist * math.sin(theta))


def as_points(coords: Iterable[Sequence[float]]) -> list[Point]:
    """Convert (x, y) pairs to points, rejecting NaN/inf coordinates."""

    points = [Point(float(x), float(y)) for x, y in coords]

    for i, p in enumerate(points):
        if not (math.isfinite(p.x) and math.isfinite(p.y)):
            raise exc.InvalidParameter(f"Point {i} is not finite: {p}")

    return points


def distance(p: Point, q: Point) -> float:
    return math.hypot(q.x - p.x, q.y - p.y)


def diameter(points: Sequence[Point]) -> float:
    """Return the bounding-box diagonal, an upper bound on the true diameter."""

    if not points:
        return 0.0

    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return math.hypot(max(xs) - min(xs), max(ys) - min(ys))


def coincident(p: Point, q: Point) -> bool:
    """Return True if p and q are too close for the bearing p->q to mean anything.

    The test is per coordinate, in units of the float spacing at that magnitude. It is
    much tighter than the duplicate tolerance of an instance, as virtual points sit
    closer to their twins than that.
    """

    def close(a: float, b: float) -> bool:
        return abs(b - a) <= COINCIDENT_ULPS * math.ulp(max(abs(a), abs(b)))

    return close(p.x, q.x) and close(p.y, q.y)


def normalize(theta: float) -> Direction:
    """Normalize an angle to [0, 2π)."""

    theta = math.fmod(theta, TWO_PI)
    if theta < 0.0:
        theta += TWO_PI
    return 0.0 if theta >= TWO_PI else theta  # -tiny + 2π can round up to 2π


def angular_distance(a: float, b: float) -> float:
    """Return the (unsigned) smaller angle between two directions, in [0, π]."""

    d = math.fmod(abs(a - b), TWO_PI)
    return TWO_PI - d if d > math.pi else d


def direction(frm: Point, to: Point) -> Direction:
    """Return the bearing of the ray frm->to."""

    if coincident(frm, to):
        raise exc.CoincidentPoints(f"No direction from {frm} to {to}")
    return normalize(math.atan2(to.y - frm.y, to.x - frm.x))


def _segment_bearing(u: Point, v: Point) -> Direction:
    try:
        return direction(u, v)
    except exc.CoincidentPoints as err:
        raise exc.DegenerateSegment(f"Segment endpoints coincide: {u}") from err


def classify_region(u: Point, v: Point, q: Point) -> RegionId:
    """Return the region of the partition induced by (u, v) that contains q."""

    theta = _segment_bearing(u, v)
    if coincident(q, u) or coincident(q, v):
        raise exc.DuplicatePoint(f"Query point {q} is an endpoint of the segment")

    if angular_distance(direction(u, q), theta + math.pi) <= HALF_ANGLE + ANGLE_TOL:
        return RegionId.R1
    if angular_distance(direction(v, q), theta) <= HALF_ANGLE + ANGLE_TOL:
        return RegionId.R3

    cross = (v.x - u.x) * (q.y - u.y) - (v.y - u.y) * (q.x - u.x)
    return RegionId.R4 if cross < 0.0 else RegionId.R2  # the open segment is R2


def region_axis(u: Point, v: Point, region: RegionId) -> Direction:
    """Return a direction that moves a point of the region deeper into it.

    For side regions this is the wedge's axis, for center regions the perpendicular
    pointing away from the segment.
    """

    theta = _segment_bearing(u, v)
    return normalize(
        {
            RegionId.R1: theta + math.pi,
            RegionId.R2: theta + math.pi / 2,
            RegionId.R3: theta,
            RegionId.R4: theta - math.pi / 2,
        }[region]
    )


@dataclass(frozen=True, slots=True)
class Cone:
    """A closed transmission cone of angular width 2π/3."""

    apex: Point
    bisector: Direction
    half_angle: float = HALF_ANGLE

    def __str__(self) -> str:
        return f"{self.__class__.__name__}(apex={self.apex}, bisector={self.bisector!r})"

    def contains(self, q: Point) -> bool:
        return cone_contains(self, q)

    def contains_bearing(self, theta: Direction) -> bool:
        return angular_distance(theta, self.bisector) <= self.half_angle + ANGLE_TOL


def basic_cone(u: Point, v: Point, kind: ConeKind) -> Cone:
    """Return the basic cone of u, with respect to v, of the given kind."""

    theta = _segment_bearing(u, v)
    return Cone(u, normalize(theta + _KIND_OFFSET[kind]))


def basic_bisector(theta: Direction, kind: ConeKind) -> Direction:
    """Return the bisector of the basic cone of the given kind, given the bearing."""
    return normalize(theta + _KIND_OFFSET[kind])


def cone_contains(c: Cone, q: Point) -> bool:
    """Return True if q lies in the closed cone c."""

    if coincident(q, c.apex):
        raise exc.ApexQuery(f"Query point {q} is the apex of {c}")
    return c.contains_bearing(direction(c.apex, q))


def can_cover(a: Point, partner: Point, q: Point) -> bool:
    """Return True if some basic cone of a (with respect to partner) contains q.

    The union of the three basic cones covers every direction except the open wedge
    of region R1 of (a, partner).
    """

    theta = _segment_bearing(a, partner)
    if coincident(q, a):
        raise exc.ApexQuery(f"Query point {q} is the apex {a}")
    if coincident(q, partner):
        return True
    return angular_distance(direction(a, q), theta + math.pi) >= HALF_ANGLE - ANGLE_TOL


def covering_kinds(a: Point, partner: Point, q: Point) -> list[ConeKind]:
    """Return the basic kinds of a (w.r.t. partner) whose cone contains q, in order."""

    theta = _segment_bearing(a, partner)
    if coincident(q, a):
        raise exc.ApexQuery(f"Query point {q} is the apex {a}")

    bearing = direction(a, q)
    return [
        k
        for k in KIND_PREFERENCE
        if angular_distance(bearing, theta + _KIND_OFFSET[k]) <= HALF_ANGLE + ANGLE_TOL
    ]


def mutual_edge_possible(a: Point, pa: Point, b: Point, pb: Point) -> bool:
    """Return True if a and b can be oriented (w.r.t. pa, pb) to see each other."""

    if coincident(a, b):
        raise exc.CoincidentPoints(f"The two vertices coincide: {a}")
    return can_cover(a, pa, b) and can_cover(b, pb, a)


def angular_span(dirs: Iterable[Direction]) -> float:
    """Return the smallest angle spanned by a nonempty set of directions."""

    thetas = sorted(normalize(d) for d in dirs)
    if not thetas:
        raise exc.EmptyInput("The angular span of no directions is undefined")
    if len(thetas) == 1:
        return 0.0

    gaps = [b - a for a, b in zip(thetas, thetas[1:], strict=False)]
    gaps.append(thetas[0] + TWO_PI - thetas[-1])
    return max(0.0, TWO_PI - max(gaps))
