#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
"""Provides the orientation state of the vertices, and the transmission graph.

A vertex is oriented by giving it one of the three basic cones with respect to its
partner in the matching. Once set, the orientation of a vertex never changes.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field, replace
from typing import TYPE_CHECKING, Final

import networkx as nx  # type: ignore[import-untyped]
import numpy as np

from . import exceptions as exc
from .const import ANGLE_TOL, HALF_ANGLE, TWO_PI, Condition, ConeKind, Phase, Scenario
from .geom import Cone, angular_distance, basic_bisector, direction

if TYPE_CHECKING:
    from numpy.typing import NDArray

    from .geom import Direction, Point


_LOGGER = logging.getLogger(__name__)

# the phases in which a non-center kind needs an already oriented partner
_CENTER_RULE_PHASES: Final = (Phase.I, Phase.II)


@dataclass(frozen=True, slots=True)
class Provenance:
    """Why (and when) a vertex was given its orientation."""

    phase: Phase
    due_edge: int | None = None
    condition: Condition | None = None
    simultaneous: bool = False  # part of a double assignment
    scenario: Scenario | None = None

    def __post_init__(self) -> None:
        if self.condition is not None and self.phase != Phase.I:
            raise exc.InvalidParameter(f"A condition is only valid in phase I: {self}")
        if self.scenario is not None and self.phase != Phase.II:
            raise exc.InvalidParameter(f"A scenario is only valid in phase II: {self}")


@dataclass(frozen=True, slots=True)
class VertexOrientation:
    """The cone kind of a vertex, the vertex it is relative to, and its provenance."""

    kind: ConeKind
    partner: int | None  # None only once a virtual partner has been removed
    bisector: Direction
    provenance: tuple[Provenance, ...] = ()

    def cone(self, apex: Point) -> Cone:
        return Cone(apex, self.bisector)


@dataclass(frozen=True, slots=True)
class TraceEntry:
    """One record of the (stable) trace log."""

    phase: Phase
    vertex: int
    kind: ConeKind
    due_edge: int | None = None
    condition: Condition | None = None
    scenario: Scenario | None = None


@dataclass(slots=True)
class TransmissionGraph:
    """The graph of all pairs of vertices that lie in each other's cones."""

    points: Sequence[Point]
    cones: Sequence[Cone]
    edges: set[tuple[int, int]] = field(default_factory=set)

    def __str__(self) -> str:
        return f"{self.__class__.__name__}(n={len(self.points)}, m={self.edge_count})"

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def as_nx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self.points)))
        graph.add_edges_from(self.edges)
        return graph

    def is_connected(self) -> bool:
        return len(self.points) < 2 or bool(nx.is_connected(self.as_nx()))


def _within(theta: Direction, bisector: Direction) -> bool:
    return angular_distance(theta, bisector) <= HALF_ANGLE + ANGLE_TOL


def mutual_containment(
    points: Sequence[Point], bisectors: Sequence[Direction]
) -> NDArray[np.bool_]:
    """Return the n x n matrix of pairs that lie in each other's (closed) cones."""

    xy = np.asarray(points, dtype=float).reshape(-1, 2)
    dx = xy[None, :, 0] - xy[:, None, 0]
    dy = xy[None, :, 1] - xy[:, None, 1]

    bearing = np.mod(np.arctan2(dy, dx), TWO_PI)  # [i, j] is the bearing of i->j
    diff = np.mod(np.abs(bearing - np.asarray(bisectors, dtype=float)[:, None]), TWO_PI)
    inside = np.minimum(diff, TWO_PI - diff) <= HALF_ANGLE + ANGLE_TOL

    mutual: NDArray[np.bool_] = inside & inside.T
    np.fill_diagonal(mutual, False)
    return mutual


class OrientationState:
    """The (mutable, single-writer) orientation state of a matched vertex set.

    The matching is a sequence of vertex-disjoint edges; the partner of a vertex is
    the other end of its matching edge.
    """

    def __init__(
        self, points: Sequence[Point], matching: Sequence[tuple[int, int]]
    ) -> None:
        self._points: Final = points
        self._matching: Final = tuple(matching)

        self._partner: list[int | None] = [None] * len(points)
        self._edge_of: list[int | None] = [None] * len(points)

        for idx, (a, b) in enumerate(self._matching):
            if self._partner[a] is not None or self._partner[b] is not None:
                raise exc.InvalidParameter(f"Matching edges are not disjoint: {a}, {b}")
            self._partner[a], self._partner[b] = b, a
            self._edge_of[a] = self._edge_of[b] = idx

        self._orientations: list[VertexOrientation | None] = [None] * len(points)
        self._due: set[tuple[int, int]] = set()  # (vertex, due_edge)
        self._trace: list[TraceEntry] = []
        self._bearings: dict[tuple[int, int], Direction] = {}  # (from, to)

    def __str__(self) -> str:
        oriented = sum(o is not None for o in self._orientations)
        return f"{self.__class__.__name__}(oriented={oriented}/{len(self._points)})"

    @property
    def points(self) -> Sequence[Point]:
        return self._points

    @property
    def matching(self) -> tuple[tuple[int, int], ...]:
        return self._matching

    @property
    def trace(self) -> list[TraceEntry]:
        return self._trace

    def partner(self, vertex: int) -> int | None:
        return self._partner[vertex]

    def edge_of(self, vertex: int) -> int | None:
        return self._edge_of[vertex]

    def orientation(self, vertex: int) -> VertexOrientation | None:
        return self._orientations[vertex]

    def orientations(self) -> list[VertexOrientation]:
        """Return the orientation of every vertex (all must be oriented)."""

        if missing := self.unoriented():
            raise exc.UnorientedVertex(f"Vertices are not oriented: {missing[:10]}")
        return self._orientations  # type: ignore[return-value]

    def is_oriented(self, vertex: int) -> bool:
        return self._orientations[vertex] is not None

    def unoriented(self) -> list[int]:
        return [v for v, o in enumerate(self._orientations) if o is None]

    def oriented_due_to(self, vertex: int, edge: int) -> bool:
        return (vertex, edge) in self._due

    def bearing(self, a: int, b: int) -> Direction:
        """Return the bearing of a->b, computed once per ordered pair."""

        if (theta := self._bearings.get((a, b))) is None:
            theta = self._bearings[a, b] = direction(self._points[a], self._points[b])
        return theta

    def cone(self, vertex: int) -> Cone | None:
        if (o := self._orientations[vertex]) is None:
            return None
        return o.cone(self._points[vertex])

    def candidate_bisector(self, vertex: int, kind: ConeKind) -> Direction:
        """Return the bisector vertex would get if it were given this kind."""

        partner = self._partner[vertex]
        if partner is None:
            raise exc.InvalidParameter(f"Vertex {vertex} has no partner")
        return basic_bisector(self.bearing(vertex, partner), kind)

    def _check_assignment(
        self, vertex: int, kind: ConeKind, prov: Provenance, co_vertex: int | None
    ) -> bool:
        """Check the assignment rules, and return True if it only adds provenance."""

        if (cur := self._orientations[vertex]) is not None:
            if (
                kind == cur.kind
                and prov.phase == Phase.I
                and all(p.phase == Phase.I for p in cur.provenance)
            ):
                return True
            raise exc.ReorientAttempt(
                f"Vertex {vertex} is already oriented ({cur.kind}), "
                f"cannot reassign {kind} in phase {prov.phase}"
            )

        partner = self._partner[vertex]
        if partner is None:
            raise exc.InvalidParameter(f"Vertex {vertex} has no partner")

        if (
            kind != ConeKind.CENTER
            and prov.phase in _CENTER_RULE_PHASES
            and self._orientations[partner] is None
            and co_vertex != partner
        ):
            raise exc.NonCenterFirst(
                f"Vertex {vertex} is the first of its edge to be oriented, "
                f"so must be {ConeKind.CENTER}, not {kind}"
            )

        return False

    def _apply(self, vertex: int, kind: ConeKind, prov: Provenance, append: bool) -> None:
        if append:
            cur = self._orientations[vertex]
            assert cur is not None  # mypy
            self._orientations[vertex] = replace(cur, provenance=(*cur.provenance, prov))
        else:
            self._orientations[vertex] = VertexOrientation(
                kind,
                self._partner[vertex],
                self.candidate_bisector(vertex, kind),
                (prov,),
            )

        if prov.due_edge is not None:
            self._due.add((vertex, prov.due_edge))

        self._trace.append(
            TraceEntry(
                prov.phase,
                vertex,
                kind,
                due_edge=prov.due_edge,
                condition=prov.condition,
                scenario=prov.scenario,
            )
        )

    def assign(self, vertex: int, kind: ConeKind, prov: Provenance) -> None:
        """Orient a vertex (or, in phase I, add provenance to an identical orientation).

        In phases I and II a non-center kind is allowed only if the vertex is the
        second of its matching edge to be oriented.
        """

        append = self._check_assignment(vertex, kind, prov, None)
        self._apply(vertex, kind, prov, append)

    def assign_double(
        self,
        a: int,
        kind_a: ConeKind,
        prov_a: Provenance,
        b: int,
        kind_b: ConeKind,
        prov_b: Provenance,
    ) -> None:
        """Orient two vertices simultaneously, validating both before either is set."""

        prov_a = replace(prov_a, simultaneous=True)
        prov_b = replace(prov_b, simultaneous=True)

        append_a = self._check_assignment(a, kind_a, prov_a, b)
        append_b = self._check_assignment(b, kind_b, prov_b, a)

        self._apply(a, kind_a, prov_a, append_a)
        self._apply(b, kind_b, prov_b, append_b)

    def sees(self, a: int, b: int) -> bool:
        """Return True if b lies in a's (assigned) cone."""

        if (o := self._orientations[a]) is None:
            return False
        return _within(self.bearing(a, b), o.bisector)

    def would_see(self, a: int, kind: ConeKind, b: int) -> bool:
        """Return True if b would lie in a's cone, were a given this kind."""

        return _within(self.bearing(a, b), self.candidate_bisector(a, kind))

    def is_transmission_edge(self, a: int, b: int) -> bool:
        """Return True if a and b are both oriented and lie in each other's cones."""

        if a == b:
            return False
        return self.sees(a, b) and self.sees(b, a)

    def connectors(self, e: int, f: int) -> Iterator[tuple[int, int]]:
        """Yield the transmission edges (a, b) with a in edge e and b in edge f."""

        for a in self._matching[e]:
            for b in self._matching[f]:
                if self.is_transmission_edge(a, b):
                    yield a, b

    def connector_exists(self, e: int, f: int) -> bool:
        return next(self.connectors(e, f), None) is not None

    def transmission_graph(self) -> TransmissionGraph:
        """Return the complete transmission graph (a quadratic enumeration)."""

        orientations = self.orientations()
        return transmission_graph(self._points, [o.bisector for o in orientations])


def transmission_graph(
    points: Sequence[Point], bisectors: Sequence[Direction]
) -> TransmissionGraph:
    """Return the transmission graph induced by cones with the given bisectors."""

    mutual = mutual_containment(points, bisectors)
    rows, cols = np.nonzero(np.triu(mutual, k=1))

    _LOGGER.debug(f"Transmission graph: n={len(points)}, m={len(rows)}")

    return TransmissionGraph(
        points,
        [Cone(p, b) for p, b in zip(points, bisectors, strict=True)],
        {(int(a), int(b)) for a, b in zip(rows, cols, strict=True)},
    )
