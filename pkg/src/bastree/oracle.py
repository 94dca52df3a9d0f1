#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
"""Ground truth for small instances: the exhaustive α-MST, and instance generators.

The α-MST is found by decoding every Prüfer sequence (i.e. every labelled spanning
tree) and keeping the lightest tree whose edges span an angle of at most α at every
vertex. Ties are broken by the (sorted) edge list, so the optimum is deterministic
however the enumeration is partitioned.
"""

from __future__ import annotations

import heapq
import logging
import math
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

import networkx as nx  # type: ignore[import-untyped]
import numpy as np

from . import exceptions as exc
from .const import ANGLE_TOL, ORACLE_ALPHA, ORACLE_MAX_N, ORACLE_MIN_ALPHA, TWO_PI
from .geom import Point, angular_span, as_points, direction, distance
from .matching import PathInstance

_LOGGER = logging.getLogger(__name__)


_Edge = tuple[int, int]


@dataclass(frozen=True)
class OracleConfig:
    alpha: float = ORACLE_ALPHA
    max_n: int = ORACLE_MAX_N
    workers: int = 1

    def __post_init__(self) -> None:
        if not ORACLE_MIN_ALPHA <= self.alpha < TWO_PI:
            raise exc.InvalidParameter(
                f"alpha must be in [π/3, 2π), not {self.alpha!r}"
            )
        if self.max_n < 2:
            raise exc.InvalidParameter(f"max_n must be >= 2, not {self.max_n}")
        if self.workers < 1:
            raise exc.InvalidParameter(f"workers must be >= 1, not {self.workers}")


@dataclass(frozen=True)
class OracleResult:
    weight: float
    edges: tuple[_Edge, ...]
    examined: int
    feasible: int
    alpha: float = ORACLE_ALPHA

    def __str__(self) -> str:
        return (
            f"{self.__class__.__name__}(weight={self.weight:.6g}, "
            f"feasible={self.feasible}/{self.examined})"
        )


def prufer_decode(seq: Sequence[int], n: int) -> list[_Edge]:
    """Return the (sorted) edges of the labelled tree encoded by a Prüfer sequence."""

    degree = [1] * n
    for v in seq:
        degree[v] += 1

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)

    edges: list[_Edge] = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v) if leaf < v else (v, leaf))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)

    a, b = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((a, b) if a < b else (b, a))
    return sorted(edges)


def _check_size(n: int, max_n: int) -> None:
    if n < 2:
        raise exc.InvalidParameter(f"A spanning tree needs at least 2 vertices, not {n}")
    if n > max_n:
        raise exc.TooLarge(f"{n} points is too many for enumeration (max {max_n})")


def enumerate_spanning_trees(
    n: int, /, *, max_n: int = ORACLE_MAX_N, lead: int | None = None
) -> Iterator[list[_Edge]]:
    """Yield every labelled spanning tree on n vertices, exactly once.

    If lead is given, only the trees whose Prüfer sequence starts with it are yielded.
    """

    _check_size(n, max_n)

    if n == 2:
        if lead is None:
            yield [(0, 1)]
        return

    heads = range(n) if lead is None else (lead,)
    for head in heads:
        for tail in product(range(n), repeat=n - 3):
            yield prufer_decode((head, *tail), n)


def angular_spans(points: Sequence[Point], edges: Sequence[_Edge]) -> list[float]:
    """Return the angle spanned by the incident edges, at each vertex."""

    bearings: list[list[float]] = [[] for _ in points]
    for a, b in edges:
        bearings[a].append(direction(points[a], points[b]))
        bearings[b].append(direction(points[b], points[a]))
    return [angular_span(d) if d else 0.0 for d in bearings]


def _assert_spanning_tree(n: int, edges: Sequence[_Edge]) -> None:
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(edges)
    if graph.number_of_edges() != len(edges) or not nx.is_tree(graph):
        raise exc.NotATree(f"The {len(edges)} edges are not a spanning tree of {n} points")


def tree_alpha_feasible(
    points: Sequence[Point], edges: Sequence[_Edge], alpha: float = ORACLE_ALPHA
) -> bool:
    """Return True if the tree's edges span at most alpha at every vertex."""

    _assert_spanning_tree(len(points), edges)
    return all(s <= alpha + ANGLE_TOL for s in angular_spans(points, edges))


class _Search:
    """The exhaustive search, over precomputed bearings and lengths."""

    def __init__(self, coords: Sequence[tuple[float, float]], alpha: float) -> None:
        xy = np.asarray(coords, dtype=float)
        dx = xy[None, :, 0] - xy[:, None, 0]
        dy = xy[None, :, 1] - xy[:, None, 1]

        self._n = len(coords)
        self._alpha = alpha + ANGLE_TOL
        self._bearing = np.mod(np.arctan2(dy, dx), TWO_PI).tolist()
        self._length = np.hypot(dx, dy).tolist()

    def feasible(self, edges: Sequence[_Edge]) -> bool:
        incident: list[list[float]] = [[] for _ in range(self._n)]
        for a, b in edges:
            incident[a].append(self._bearing[a][b])
            incident[b].append(self._bearing[b][a])

        for thetas in incident:
            if len(thetas) < 2:
                continue
            thetas.sort()
            gap = thetas[0] + TWO_PI - thetas[-1]
            for lo, hi in zip(thetas, thetas[1:]):
                gap = max(gap, hi - lo)
            if TWO_PI - gap > self._alpha:
                return False
        return True

    def run(self, lead: int | None) -> tuple[float, tuple[_Edge, ...] | None, int, int]:
        best: tuple[float, tuple[_Edge, ...]] | None = None
        examined = feasible = 0

        for edges in enumerate_spanning_trees(self._n, max_n=self._n, lead=lead):
            examined += 1
            if not self.feasible(edges):
                continue
            feasible += 1

            key = (math.fsum(self._length[a][b] for a, b in edges), tuple(edges))
            if best is None or key < best:
                best = key

        if best is None:
            return math.inf, None, examined, feasible
        return best[0], best[1], examined, feasible


def _search_partition(
    coords: Sequence[tuple[float, float]], alpha: float, lead: int | None
) -> tuple[float, tuple[_Edge, ...] | None, int, int]:
    return _Search(coords, alpha).run(lead)


def alpha_mst_bruteforce(
    points: Sequence[Point], config: OracleConfig | None = None
) -> OracleResult:
    """Return a minimum-weight α-spanning tree, by exhaustive enumeration."""

    config = config or OracleConfig()
    n = len(points)
    _check_size(n, config.max_n)

    coords = [(p.x, p.y) for p in points]

    if config.workers == 1 or n < 3:
        partials = [_search_partition(coords, config.alpha, None)]
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            partials = list(
                executor.map(
                    _search_partition, [coords] * n, [config.alpha] * n, range(n)
                )
            )

    examined = sum(p[2] for p in partials)
    feasible = sum(p[3] for p in partials)
    found = [(w, e) for w, e, _, _ in partials if e is not None]

    if not found:
        raise exc.InfeasibleUnexpected(
            f"None of the {examined} spanning trees is feasible for alpha={config.alpha!r}"
        )

    weight, edges = min(found)
    result = OracleResult(weight, edges, examined, feasible, config.alpha)

    _LOGGER.debug(f"Oracle: {result} (n={n}, workers={config.workers})")
    return result


#
# Instance generators
def collinear_instance(n: int, spacing: float = 1.0) -> PathInstance:
    """Return the points (0, 0), (s, 0), ..., ((n - 1)s, 0), as a path."""

    if spacing <= 0.0:
        raise exc.InvalidParameter(f"spacing must be > 0, not {spacing!r}")
    return PathInstance.from_coords((i * spacing, 0.0) for i in range(n))


def uniform_points(n: int, seed: int | None = None) -> list[Point]:
    """Return n points drawn uniformly (and reproducibly) from the unit square."""

    if n < 1:
        raise exc.InvalidParameter(f"n must be >= 1, not {n}")

    rng = np.random.default_rng(seed)
    return as_points(rng.random((n, 2)).tolist())


def uniform_instance(n: int, seed: int | None = None) -> PathInstance:
    """Return n uniformly drawn points, in the order drawn, as a path."""
    return PathInstance(tuple(uniform_points(n, seed)))


def tree_weight(points: Sequence[Point], edges: Sequence[_Edge]) -> float:
    return sum(distance(points[a], points[b]) for a, b in edges)
