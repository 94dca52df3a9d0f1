#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
"""Checks a built tree against every guarantee of the construction."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Final

import networkx as nx  # type: ignore[import-untyped]

from .const import ANGLE_TOL, CONE_ANGLE, WEIGHT_TOL
from .geom import Cone, direction
from .oracle import angular_spans, tree_weight
from .orientation import transmission_graph

if TYPE_CHECKING:
    from .builder import BastResult
    from .matching import PathInstance


_LOGGER = logging.getLogger(__name__)

_Edge = tuple[int, int]

HOP_LIMIT: Final = 3
MAX_WITNESSES: Final = 10

# check names, as used in the output document
CHECK_TREE: Final = "spanning_tree"
CHECK_ANGLE: Final = "angle_span"
CHECK_TRANSMISSION: Final = "transmission_edges"
CHECK_WEIGHT: Final = "weight_consistency"
CHECK_PATH_BOUND: Final = "path_bound"
CHECK_HOPS: Final = "hop_spanner"
CHECK_MST_BOUND: Final = "mst_bound"
CHECK_CONNECTED: Final = "transmission_graph_connected"


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witnesses: tuple[Any, ...] = ()
    slack: float | None = None

    def __str__(self) -> str:
        return f"{self.name}: {'pass' if self.passed else 'FAIL'}"


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    def __str__(self) -> str:
        failed = [c.name for c in self.checks if not c.passed]
        return f"{self.__class__.__name__}(passed={self.passed}, failed={failed})"

    def __getitem__(self, name: str) -> Check:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def __contains__(self, name: object) -> bool:
        return any(c.name == name for c in self.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(
        self,
        name: str,
        witnesses: Iterable[Any],
        slack: float | None = None,
    ) -> Check:
        found = tuple(witnesses)
        check = Check(name, not found, found[:MAX_WITNESSES], slack)
        self.checks.append(check)
        return check


def _as_graph(n: int, edges: Iterable[_Edge]) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(edges)
    return graph


def hop_distance(tree: nx.Graph | Sequence[_Edge], a: int, b: int, k: int) -> int | None:
    """Return the hop distance from a to b, if it is at most k (else None)."""

    graph = tree if isinstance(tree, nx.Graph) else _as_graph(0, tree)
    if a not in graph or b not in graph:
        return None
    return nx.single_source_shortest_path_length(graph, a, cutoff=k).get(b)  # type: ignore[no-any-return]


def hop_distance_ok(tree: nx.Graph | Sequence[_Edge], a: int, b: int, k: int) -> bool:
    """Return True if a and b are at most k edges apart in the tree."""
    return hop_distance(tree, a, b, k) is not None


def verify_result(
    path: PathInstance,
    result: BastResult,
    /,
    *,
    mst_weight: float | None = None,
    connectivity: bool = False,
) -> VerificationReport:
    """Check a tree built on the path's points: shape, angles, cones, weights, hops.

    If mst_weight is given, the tree's weight is also checked against 4 times it. The
    (quadratic) transmission graph connectivity is checked only if asked for.
    """

    report = VerificationReport()
    pts = path.points
    n = len(pts)
    edges = [(a, b) for a, b in result.edges if 0 <= a < n and 0 <= b < n and a != b]

    graph = _as_graph(n, edges)
    shape: list[str] = []
    if not (len(result.edges) == n - 1 == len(edges) and nx.is_tree(graph)):
        components = nx.number_connected_components(graph)
        shape.append(f"{len(result.edges)} edges, {components} component(s)")
    report.add(CHECK_TREE, shape)

    spans = angular_spans(pts, edges)
    report.add(
        CHECK_ANGLE,
        [v for v, s in enumerate(spans) if s > CONE_ANGLE + ANGLE_TOL],
        slack=CONE_ANGLE - max(spans, default=0.0),
    )

    if len(result.orientations) == n:
        cones = [Cone(p, o.bisector) for p, o in zip(pts, result.orientations)]
        bad = [
            (a, b)
            for a, b in edges
            if not (
                cones[a].contains_bearing(direction(pts[a], pts[b]))
                and cones[b].contains_bearing(direction(pts[b], pts[a]))
            )
        ]
    else:
        bad = [f"{len(result.orientations)} orientations for {n} points"]
    report.add(CHECK_TRANSMISSION, bad)

    weight = tree_weight(pts, edges)
    path_weight = path.weight
    report.add(
        CHECK_WEIGHT,
        [
            f"{label}: recorded {recorded!r}, actual {actual!r}"
            for label, recorded, actual in (
                ("tree", result.weight, weight),
                ("path", result.path_weight, path_weight),
            )
            if abs(recorded - actual) > WEIGHT_TOL * max(1.0, actual)
        ],
    )

    slack = 2.0 * path_weight - weight
    report.add(
        CHECK_PATH_BOUND,
        [f"{weight!r} > 2 x {path_weight!r}"]
        if slack < -WEIGHT_TOL * max(1.0, weight)
        else [],
        slack=slack,
    )

    report.add(
        CHECK_HOPS,
        [
            (i, i + 1)
            for i in range(n - 1)
            if not hop_distance_ok(graph, i, i + 1, HOP_LIMIT)
        ],
    )

    if mst_weight is not None:
        slack = 4.0 * mst_weight - weight
        report.add(
            CHECK_MST_BOUND,
            [f"{weight!r} > 4 x {mst_weight!r}"]
            if slack < -WEIGHT_TOL * max(1.0, weight)
            else [],
            slack=slack,
        )

    if connectivity and len(result.orientations) == n:
        tg = transmission_graph(pts, [o.bisector for o in result.orientations])
        report.add(CHECK_CONNECTED, [] if tg.is_connected() else [str(tg)])

    if not report.passed:
        _LOGGER.warning(f"Verification failed: {report}")
    else:
        _LOGGER.debug(f"Verification passed: {report}")
    return report
