#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
"""Provides the path instance, the choice of matching, and the virtual points.

The matching is one of the two sets of alternate edges of the path: the first
({p1,p2}, {p3,p4}, ...) or the second ({p2,p3}, {p4,p5}, ...). If it leaves an end of
the path unmatched, a virtual point is placed very close to that end (in the same
region of the partition of the adjacent matching edge) and matched with it.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from scipy.spatial import cKDTree  # type: ignore[import-untyped]

from . import exceptions as exc
from .const import (
    DUPLICATE_REL_TOL,
    VIRTUAL_EPS_FACTOR,
    VIRTUAL_EPS_SHRINK,
    MatchingChoice,
    RegionId,
)
from .geom import (
    Point,
    as_points,
    classify_region,
    coincident,
    diameter,
    distance,
    region_axis,
)

_LOGGER = logging.getLogger(__name__)


_Edge = tuple[int, int]


def find_duplicates(points: Sequence[Point]) -> list[_Edge]:
    """Return the pairs of points closer than the duplicate tolerance."""

    if len(points) < 2:
        return []

    tol = DUPLICATE_REL_TOL * diameter(points)
    tree = cKDTree([(p.x, p.y) for p in points])
    return sorted(tuple(sorted(pair)) for pair in tree.query_pairs(r=tol))


@dataclass(frozen=True)
class PathInstance:
    """An ordered sequence of (distinct) points, the path p_1, ..., p_n."""

    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        if len(self.points) < 2:
            raise exc.PathTooShort(f"A path needs at least 2 points, not {len(self)}")

        if dupes := find_duplicates(self.points):
            a, b = dupes[0]
            raise exc.DuplicatePoints(
                f"Points {a} and {b} coincide: {self.points[a]} ({len(dupes)} pair(s))"
            )

    @classmethod
    def from_coords(cls, coords: Iterable[Sequence[float]]) -> PathInstance:
        return cls(tuple(as_points(coords)))

    def __len__(self) -> int:
        return len(self.points)

    def __str__(self) -> str:
        return f"{self.__class__.__name__}(n={len(self)}, weight={self.weight:.6g})"

    @cached_property
    def weight(self) -> float:
        return sum(distance(a, b) for a, b in zip(self.points, self.points[1:]))

    def edge_weight(self, a: int, b: int) -> float:
        return distance(self.points[a], self.points[b])


@dataclass(frozen=True)
class MatchingSequence:
    """Alternate path edges, in path order, with the path ends they leave unmatched."""

    edges: tuple[_Edge, ...]
    choice: MatchingChoice
    weight: float
    unmatched: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class VirtualPoint:
    """A virtual point, its real twin, and the matching edge next to the twin."""

    real: int
    virtual: int
    adjacent: _Edge  # the matching edge next to the real twin (a real edge)
    region: RegionId  # of the real twin, in the partition of adjacent
    epsilon: float


@dataclass(frozen=True)
class VirtualAugmentation:
    virtual_points: tuple[VirtualPoint, ...] = ()

    def __bool__(self) -> bool:
        return bool(self.virtual_points)

    def twin_of(self, vertex: int) -> int | None:
        """Return the real twin of a virtual vertex (None if vertex is real)."""

        for vp in self.virtual_points:
            if vp.virtual == vertex:
                return vp.real
        return None


@dataclass(frozen=True)
class AugmentedInstance:
    """The (real and virtual) points, and a perfect matching of them, in path order."""

    points: tuple[Point, ...]
    matching: tuple[_Edge, ...]
    n_real: int
    augmentation: VirtualAugmentation = field(default_factory=VirtualAugmentation)

    def __str__(self) -> str:
        return (
            f"{self.__class__.__name__}(n={self.n_real}, "
            f"virtual={len(self.points) - self.n_real}, edges={len(self.matching)})"
        )


def _alternate_edges(n: int, start: int) -> tuple[_Edge, ...]:
    return tuple((i, i + 1) for i in range(start, n - 1, 2))


def select_matching(
    path: PathInstance, force: MatchingChoice = MatchingChoice.AUTO
) -> MatchingSequence:
    """Return the lighter set of alternate path edges (the first one on a tie)."""

    n = len(path)
    if n < 2:
        raise exc.PathTooShort(f"A path needs at least 2 points, not {n}")

    candidates = {
        MatchingChoice.FIRST: _alternate_edges(n, 0),
        MatchingChoice.SECOND: _alternate_edges(n, 1),
    }
    weights = {
        c: sum(path.edge_weight(a, b) for a, b in edges) for c, edges in candidates.items()
    }

    if force == MatchingChoice.AUTO:
        choice = MatchingChoice.FIRST
        if candidates[MatchingChoice.SECOND] and (
            weights[MatchingChoice.SECOND] < weights[MatchingChoice.FIRST]
        ):
            choice = MatchingChoice.SECOND

    elif not candidates[force]:
        raise exc.InvalidParameter(f"The {force} matching of a {n}-point path is empty")

    else:
        choice = force

    edges = candidates[choice]
    matched = {v for e in edges for v in e}
    unmatched = tuple(v for v in (0, n - 1) if v not in matched)

    _LOGGER.debug(
        f"Matching: {choice} chosen (first={weights[MatchingChoice.FIRST]:.6g}, "
        f"second={weights[MatchingChoice.SECOND]:.6g}), unmatched={unmatched}"
    )
    return MatchingSequence(edges, choice, weights[choice], unmatched)


def _place_virtual(
    points: Sequence[Point], real: int, adjacent: _Edge, index: int
) -> tuple[VirtualPoint, Point] | None:
    p, u, v = points[real], points[adjacent[0]], points[adjacent[1]]

    region = classify_region(u, v, p)
    axis = region_axis(u, v, region)
    eps = VIRTUAL_EPS_FACTOR * min(distance(p, u), distance(p, v), distance(u, v))

    for attempt in range(2):
        q = p.offset(axis, eps)
        if not coincident(q, p) and classify_region(u, v, q) == region:
            return VirtualPoint(real, index, adjacent, region, eps), q

        if attempt == 0:
            _LOGGER.warning(
                f"Virtual point of vertex {real} left region {region}, "
                f"retrying with epsilon={eps / VIRTUAL_EPS_SHRINK:.3g}"
            )
        eps /= VIRTUAL_EPS_SHRINK

    return None


def augment_virtual(path: PathInstance, matching: MatchingSequence) -> AugmentedInstance:
    """Make the matching perfect, by matching each unmatched end with a virtual point.

    The virtual points get the indices n, n+1 (in the order of their real twins), and
    each new edge is placed at its twin's end of the matching sequence.
    """

    n = len(path)
    points = list(path.points)
    edges = list(matching.edges)
    virtual: list[VirtualPoint] = []

    for real in matching.unmatched:
        adjacent = matching.edges[0] if real == 0 else matching.edges[-1]

        placed = _place_virtual(points, real, adjacent, len(points))
        if placed is None:
            raise exc.AugmentationFailed(
                f"No virtual point for vertex {real} stays in its region of {adjacent}"
            )

        vp, q = placed
        points.append(q)

        if real == 0:
            edges.insert(0, (real, vp.virtual))
        else:
            edges.append((real, vp.virtual))
        virtual.append(vp)

    result = AugmentedInstance(
        tuple(points), tuple(edges), n, VirtualAugmentation(tuple(virtual))
    )
    if virtual:
        _LOGGER.debug(f"Augmented: {result}")
    return result
