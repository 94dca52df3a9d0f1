#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
"""The 4-approximation: Euclidean MST -> spanning path -> bounded-angle tree."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix  # type: ignore[import-untyped]
from scipy.sparse.csgraph import minimum_spanning_tree  # type: ignore[import-untyped]
from scipy.spatial import Delaunay, QhullError  # type: ignore[import-untyped]
from scipy.spatial.distance import pdist, squareform  # type: ignore[import-untyped]

from . import exceptions as exc
from .builder import BastResult, build_tree_from_path
from .const import (
    DENSE_MST_MAX_N,
    ConnectorPolicy,
    MatchingChoice,
    MstMethod,
    Phase2Mode,
)
from .geom import Point, distance
from .matching import PathInstance, find_duplicates

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightedTree:
    """A spanning tree of a point set, with its edge lengths."""

    points: tuple[Point, ...]
    edges: tuple[tuple[int, int], ...]  # (a, b) with a < b, sorted
    lengths: tuple[float, ...]

    def __str__(self) -> str:
        return f"{self.__class__.__name__}(n={len(self.points)}, weight={self.weight:.6g})"

    @property
    def weight(self) -> float:
        return sum(self.lengths)

    def adjacency(self) -> list[list[tuple[float, int]]]:
        """Return, per vertex, its (length, neighbour) pairs in increasing order."""

        adj: list[list[tuple[float, int]]] = [[] for _ in self.points]
        for (a, b), length in zip(self.edges, self.lengths, strict=True):
            adj[a].append((length, b))
            adj[b].append((length, a))
        return [sorted(nbrs) for nbrs in adj]


@dataclass(frozen=True)
class ApproxResult:
    """A tree built from the MST's walk, and the weights it is measured against."""

    result: BastResult
    path: PathInstance
    order: tuple[int, ...]  # order[i] is the input index of the path's i-th point
    mst: WeightedTree

    def __str__(self) -> str:
        return (
            f"{self.__class__.__name__}(n={len(self.order)}, "
            f"tree/mst={self.ratio_mst:.4f}, tree/path={self.ratio_path:.4f})"
        )

    @property
    def mst_weight(self) -> float:
        return self.mst.weight

    @property
    def path_weight(self) -> float:
        return self.path.weight

    @property
    def ratio_mst(self) -> float:
        return self.result.weight / self.mst_weight

    @property
    def ratio_path(self) -> float:
        return self.result.weight / self.path_weight


def _sparse_mst(
    points: Sequence[Point], rows: np.ndarray, cols: np.ndarray, lengths: np.ndarray
) -> WeightedTree:
    n = len(points)
    graph = coo_matrix((lengths, (rows, cols)), shape=(n, n))
    mst = minimum_spanning_tree(graph).tocoo()

    edges = sorted(
        (min(int(a), int(b)), max(int(a), int(b))) for a, b in zip(mst.row, mst.col)
    )
    if len(edges) != n - 1:
        raise exc.NotATree(f"The MST of {n} points has {len(edges)} edges")

    return WeightedTree(
        tuple(points),
        tuple(edges),
        tuple(distance(points[a], points[b]) for a, b in edges),
    )


def _dense_mst(points: Sequence[Point]) -> WeightedTree:
    dist = squareform(pdist(np.asarray(points, dtype=float)))
    rows, cols = np.triu_indices(len(points), k=1)
    return _sparse_mst(points, rows, cols, dist[rows, cols])


def _delaunay_mst(points: Sequence[Point]) -> WeightedTree | None:
    """Return the MST over the Delaunay edges (None if there is no triangulation)."""

    xy = np.asarray(points, dtype=float)
    try:
        tri = Delaunay(xy)
    except (QhullError, ValueError) as err:
        _LOGGER.debug(f"No triangulation ({err.__class__.__name__}), using dense MST")
        return None

    simplices = tri.simplices
    pairs = np.concatenate(
        [simplices[:, [0, 1]], simplices[:, [1, 2]], simplices[:, [0, 2]]]
    )
    pairs = np.unique(np.sort(pairs, axis=1), axis=0)

    rows, cols = pairs[:, 0], pairs[:, 1]
    lengths = np.hypot(*(xy[rows] - xy[cols]).T)
    if len(np.unique(np.concatenate([rows, cols]))) != len(points):  # e.g. coplanar
        return None
    return _sparse_mst(points, rows, cols, lengths)


def euclidean_mst(
    points: Sequence[Point], /, *, method: MstMethod = MstMethod.AUTO
) -> WeightedTree:
    """Return a minimum spanning tree of the complete Euclidean graph of the points."""

    if not points:
        raise exc.InvalidParameter("An MST needs at least one point")

    if dupes := find_duplicates(points):
        a, b = dupes[0]
        raise exc.DuplicatePoints(f"Points {a} and {b} coincide: {points[a]}")

    if len(points) == 1:
        return WeightedTree(tuple(points), (), ())

    if method == MstMethod.AUTO:
        method = MstMethod.DENSE if len(points) <= DENSE_MST_MAX_N else MstMethod.DELAUNAY

    tree = None
    if method == MstMethod.DELAUNAY and len(points) > 2:
        tree = _delaunay_mst(points)

    if tree is None:
        tree = _dense_mst(points)

    _LOGGER.debug(f"MST ({method}): {tree}")
    return tree


def mst_order(tree: WeightedTree, root: int = 0) -> list[int]:
    """Return the depth-first (first visit) order of the tree's vertices.

    The children of a vertex are visited in increasing order of edge length.
    """

    adj = tree.adjacency()
    order: list[int] = []
    seen = [False] * len(tree.points)
    stack = [root]

    while stack:
        v = stack.pop()
        if seen[v]:
            continue
        seen[v] = True
        order.append(v)
        stack.extend(w for _, w in reversed(adj[v]) if not seen[w])

    return order


def mst_to_path(tree: WeightedTree, root: int = 0) -> PathInstance:
    """Return the path that visits the points in the tree's depth-first order.

    Its weight is at most twice the tree's.
    """

    return PathInstance(tuple(tree.points[v] for v in mst_order(tree, root)))


def approx_bast(
    points: Sequence[Point],
    /,
    *,
    method: MstMethod = MstMethod.AUTO,
    matching: MatchingChoice = MatchingChoice.AUTO,
    phase2_mode: Phase2Mode = Phase2Mode.TWO_ROUND,
    policy: ConnectorPolicy = ConnectorPolicy.SHORTEST,
) -> ApproxResult:
    """Return a 2π/3-spanning tree of weight at most 4 times that of the MST."""

    if len(points) < 2:
        raise exc.PathTooShort(f"A tree needs at least 2 points, not {len(points)}")

    mst = euclidean_mst(points, method=method)
    order = mst_order(mst)
    path = PathInstance(tuple(points[v] for v in order))

    result = build_tree_from_path(
        path, matching=matching, phase2_mode=phase2_mode, policy=policy
    )

    approx = ApproxResult(result, path, tuple(order), mst)
    _LOGGER.debug(f"Approximation: {approx}")
    return approx
