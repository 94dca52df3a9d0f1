#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
"""Builds a 2π/3-spanning tree from a path, by orienting the matched vertices.

The vertices are oriented in three phases, all of which sweep the (perfect) matching
X = (e_0, e_1, ...) in path order:
  - phase I centers a vertex of e when a neighbouring edge f is placed so that a
    center cone is certain to create a transmission edge towards f
  - phase II performs rule-respecting assignments, each creating a transmission edge
    between consecutive edges of X, until none is left
  - phase III orients what is left, so that every pair of consecutive edges of X is
    joined by a transmission edge (a connector)

The tree is X plus one connector per consecutive pair.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field, replace
from functools import cached_property
from itertools import product

import numpy as np
from scipy.sparse import coo_matrix  # type: ignore[import-untyped]
from scipy.sparse.csgraph import connected_components  # type: ignore[import-untyped]

from . import exceptions as exc
from .const import (
    ANGLE_TOL,
    CONE_ANGLE,
    Condition,
    ConeKind,
    ConnectorPolicy,
    MatchingChoice,
    Phase,
    Phase2Mode,
    RegionId,
    Scenario,
)
from .geom import (
    KIND_PREFERENCE,
    Point,
    angular_span,
    classify_region,
    direction,
    distance,
)
from .matching import (
    AugmentedInstance,
    PathInstance,
    VirtualAugmentation,
    augment_virtual,
    select_matching,
)
from .orientation import OrientationState, Provenance, TraceEntry, VertexOrientation

_LOGGER = logging.getLogger(__name__)


_Edge = tuple[int, int]


def _key(a: int, b: int) -> _Edge:
    return (a, b) if a < b else (b, a)


@dataclass(slots=True)
class WorkCounters:
    """The number of pair examinations per phase (a measure of the running time)."""

    phase1: int = 0
    phase2: int = 0
    phase3: int = 0
    phase2_rounds: int = 0
    edges: int = 0  # the size of the (perfect) matching that was swept

    @property
    def examinations(self) -> int:
        return self.phase1 + self.phase2 + self.phase3

    @property
    def per_edge(self) -> float:
        return self.examinations / self.edges if self.edges else 0.0


@dataclass(frozen=True, slots=True)
class Operation:
    """A phase II operation: one or two vertices oriented at once."""

    assignments: tuple[tuple[int, ConeKind], ...]
    scenario: Scenario

    def __str__(self) -> str:
        ops = ", ".join(f"{v}:{k}" for v, k in self.assignments)
        return f"{self.__class__.__name__}({ops}, scenario={self.scenario})"

    @property
    def is_double(self) -> bool:
        return len(self.assignments) == 2


@dataclass(frozen=True)
class BastResult:
    """A bounded-angle spanning tree, and how it was built.

    The orientations are the final cones of the vertices; every tree edge is a
    transmission edge under them.
    """

    points: tuple[Point, ...]
    edges: tuple[_Edge, ...]  # matching edges first, then connectors
    matching: tuple[_Edge, ...]
    connectors: tuple[_Edge, ...]
    orientations: tuple[VertexOrientation, ...]
    weight: float
    path_weight: float
    choice: MatchingChoice = MatchingChoice.FIRST
    trace: tuple[TraceEntry, ...] = ()
    counters: WorkCounters = field(default_factory=WorkCounters)

    def __str__(self) -> str:
        return (
            f"{self.__class__.__name__}(n={len(self.points)}, weight={self.weight:.6g})"
        )

    @property
    def bisectors(self) -> list[float]:
        return [o.bisector for o in self.orientations]

    @cached_property
    def spans(self) -> list[float]:
        """Return the angular span of the tree edges at each vertex."""

        bearings: list[list[float]] = [[] for _ in self.points]
        for a, b in self.edges:
            bearings[a].append(direction(self.points[a], self.points[b]))
            bearings[b].append(direction(self.points[b], self.points[a]))
        return [angular_span(d) if d else 0.0 for d in bearings]


#
# Phase I
def _phase1_conditions(
    state: OrientationState, e: int, f: int
) -> Iterator[tuple[int, Condition]]:
    """Yield each endpoint of e that meets a phase I condition w.r.t. f."""

    pts = state.points
    u, v = state.matching[e]
    x, y = state.matching[f]

    # regions of f's endpoints in the partition of (u, v), and vice versa
    ce = {q: classify_region(pts[u], pts[v], pts[q]) for q in (x, y)}
    cf = {a: classify_region(pts[x], pts[y], pts[a]) for a in (u, v)}

    # for v, the roles of R1 and R3 in the partition of (u, v) are swapped
    for a, beyond in ((u, RegionId.R3), (v, RegionId.R1)):
        if (ce[x] == beyond and cf[a] == RegionId.R3) or (
            ce[y] == beyond and cf[a] == RegionId.R1
        ):
            yield a, Condition.FIRST
        elif ce[x] == beyond and ce[y] == beyond:
            yield a, Condition.SECOND


def phase1_examine(state: OrientationState, e: int, f: int) -> list[int]:
    """Center the endpoint of e (if any) that f makes a safe choice, return it."""

    found = list(_phase1_conditions(state, e, f))
    if len(found) > 1:
        raise exc.AtMostOneViolation(
            f"Both vertices of edge {e} {state.matching[e]} meet a condition w.r.t. {f}"
        )

    for a, condition in found:
        state.assign(a, ConeKind.CENTER, Provenance(Phase.I, f, condition))
    return [a for a, _ in found]


def phase1(state: OrientationState, counters: WorkCounters | None = None) -> None:
    """Examine each matching edge w.r.t. its previous, then its next edge."""

    counters = counters or WorkCounters()
    m = len(state.matching)

    for e in range(m):
        for f in (e - 1, e + 1):
            if 0 <= f < m:
                phase1_examine(state, e, f)
                counters.phase1 += 1

    _LOGGER.debug(
        f"Phase I: {len(state.points) - len(state.unoriented())} centered, "
        f"{counters.phase1} examinations"
    )


#
# Phase II
def _allowed_kinds(
    state: OrientationState, a: int, opposite: int
) -> tuple[ConeKind, ...]:
    """Return the kinds a may legally get in phase II (none if it may not be set)."""

    if state.is_oriented(a):
        return ()

    partner = state.partner(a)
    assert partner is not None  # mypy

    if state.oriented_due_to(partner, opposite):  # no double tapping
        return ()
    if not state.is_oriented(partner):  # the first of its edge must be centered
        return (ConeKind.CENTER,)
    return KIND_PREFERENCE


def _scenario(
    state: OrientationState, op: tuple[tuple[int, ConeKind], ...], to: int | None
) -> Scenario:
    kinds = [k for _, k in op]

    if len(op) == 2:
        if ConeKind.CENTER in kinds and kinds != [ConeKind.CENTER] * 2:
            return Scenario.FIRST
        if ConeKind.CENTER not in kinds:
            return Scenario.THIRD
        return Scenario.OTHER

    target = state.orientation(to) if to is not None else None
    if kinds[0] != ConeKind.CENTER and target and target.kind == ConeKind.CENTER:
        return Scenario.SECOND
    return Scenario.OTHER


def legal_operations(state: OrientationState, e: int, f: int) -> list[Operation]:
    """Return the operations that may be performed on the pair (e, f), in order.

    Singles come before doubles; within each, vertices are ordered u, v, x, y and kinds
    center, up, down. The list is empty if e and f are already connected.
    """

    if f != e + 1:
        raise exc.InvalidParameter(f"Edge {e} does not immediately precede edge {f}")
    if state.connector_exists(e, f):
        return []

    sides = (
        (state.matching[e], state.matching[f], f),
        (state.matching[f], state.matching[e], e),
    )
    kinds = {a: _allowed_kinds(state, a, opp) for own, _, opp in sides for a in own}

    singles: list[Operation] = []
    for own, other, _ in sides:
        for a in own:
            for kind in kinds[a]:
                for b in other:
                    if (
                        state.is_oriented(b)
                        and state.sees(b, a)
                        and state.would_see(a, kind, b)
                    ):
                        op = ((a, kind),)
                        singles.append(Operation(op, _scenario(state, op, b)))
                        break

    doubles: list[Operation] = []
    for a, b in product(state.matching[e], state.matching[f]):
        for ka, kb in product(kinds[a], kinds[b]):
            if state.would_see(a, ka, b) and state.would_see(b, kb, a):
                op = ((a, ka), (b, kb))
                doubles.append(Operation(op, _scenario(state, op, None)))

    return singles + doubles


def _apply_operation(state: OrientationState, e: int, f: int, op: Operation) -> None:
    def prov(vertex: int) -> Provenance:
        due = f if state.edge_of(vertex) == e else e
        return Provenance(Phase.II, due, scenario=op.scenario)

    if op.is_double:
        (a, ka), (b, kb) = op.assignments
        state.assign_double(a, ka, prov(a), b, kb, prov(b))
    else:
        ((a, ka),) = op.assignments
        state.assign(a, ka, prov(a))


def _phase2_round(
    state: OrientationState, pairs: Sequence[int], counters: WorkCounters
) -> int:
    """Visit the pairs (e, e+1) in the given order, applying one operation per visit."""

    applied = 0
    for e in pairs:
        counters.phase2 += 1
        if ops := legal_operations(state, e, e + 1):
            _apply_operation(state, e, e + 1, ops[0])
            applied += 1
    counters.phase2_rounds += 1
    return applied


def phase2(
    state: OrientationState,
    mode: Phase2Mode = Phase2Mode.TWO_ROUND,
    counters: WorkCounters | None = None,
) -> None:
    """Perform legal operations until none is left (quiescence).

    In two_round mode a forward round is followed by one backward round, which is
    enough. In reference mode, forward rounds are repeated until one of them performs
    no operation.
    """

    counters = counters or WorkCounters()
    forward = range(len(state.matching) - 1)

    if mode == Phase2Mode.TWO_ROUND:
        applied = _phase2_round(state, forward, counters)
        applied += _phase2_round(state, forward[::-1], counters)

    else:
        applied = 0
        productive = 0
        while count := _phase2_round(state, forward, counters):
            applied += count
            productive += 1
            if productive > len(state.points):
                raise exc.NonTermination(
                    f"Phase II did not settle after {productive} rounds"
                )

    _LOGGER.debug(
        f"Phase II ({mode}): {applied} operations in {counters.phase2_rounds} rounds"
    )


def is_quiescent(state: OrientationState) -> bool:
    """Return True if no legal operation is left for any consecutive pair."""

    return not any(
        legal_operations(state, e, e + 1) for e in range(len(state.matching) - 1)
    )


#
# Phase III
def _phase3_connect(state: OrientationState, e: int, f: int) -> None:
    """Create a connector between e and f (there is none yet)."""

    prov_e, prov_f = Provenance(Phase.III, f), Provenance(Phase.III, e)

    for own, other, prov in (
        (state.matching[e], state.matching[f], prov_e),
        (state.matching[f], state.matching[e], prov_f),
    ):
        for a, kind, b in product(own, KIND_PREFERENCE, other):
            if (
                not state.is_oriented(a)
                and state.is_oriented(b)
                and state.sees(b, a)
                and state.would_see(a, kind, b)
            ):
                state.assign(a, kind, prov)
                return

    for a, b in product(state.matching[e], state.matching[f]):
        if state.is_oriented(a) or state.is_oriented(b):
            continue
        for ka, kb in product(KIND_PREFERENCE, KIND_PREFERENCE):
            if state.would_see(a, ka, b) and state.would_see(b, kb, a):
                state.assign_double(a, ka, prov_e, b, kb, prov_f)
                return

    raise exc.AlgorithmInvariantViolation(
        f"No assignment connects edges {e} {state.matching[e]} "
        f"and {f} {state.matching[f]}"
    )


def phase3(state: OrientationState, counters: WorkCounters | None = None) -> None:
    """Orient the remaining vertices, so that every consecutive pair is connected."""

    counters = counters or WorkCounters()
    m = len(state.matching)

    for e in range(m - 1):
        counters.phase3 += 1
        if not state.connector_exists(e, e + 1):
            _phase3_connect(state, e, e + 1)

        for a in state.matching[e]:
            if not state.is_oriented(a):
                state.assign(a, ConeKind.CENTER, Provenance(Phase.III, e + 1))

    remaining = state.unoriented()
    for a in remaining:
        state.assign(a, ConeKind.CENTER, Provenance(Phase.CLEANUP))

    _LOGGER.debug(
        f"Phase III: {counters.phase3} examinations, {len(remaining)} cleaned up"
    )


#
# The tree
def _assert_tree(n: int, edges: Sequence[_Edge]) -> None:
    if len(edges) != n - 1:
        raise exc.NotATree(
            f"A tree on {n} vertices has {n - 1} edges, not {len(edges)}"
        )
    if n < 2:
        return

    rows, cols = np.array(edges, dtype=int).T
    graph = coo_matrix((np.ones(len(edges)), (rows, cols)), shape=(n, n))
    count, _ = connected_components(graph, directed=False)
    if count != 1:
        raise exc.NotATree(f"The edges form {count} components, not 1")


def _choose_connector(
    state: OrientationState, e: int, policy: ConnectorPolicy
) -> _Edge:
    found = [_key(a, b) for a, b in state.connectors(e, e + 1)]
    if not found:
        raise exc.NotATree(f"Edges {e} and {e + 1} have no connector")

    if policy == ConnectorPolicy.FIRST:
        return found[0]

    pts = state.points
    return min(found, key=lambda ab: (distance(pts[ab[0]], pts[ab[1]]), ab))


def extract_tree(
    state: OrientationState,
    policy: ConnectorPolicy = ConnectorPolicy.SHORTEST,
    /,
    *,
    path_weight: float = 0.0,
    choice: MatchingChoice = MatchingChoice.FIRST,
    counters: WorkCounters | None = None,
) -> BastResult:
    """Return the tree made of the matching plus one connector per consecutive pair."""

    pts = state.points
    matching = tuple(_key(a, b) for a, b in state.matching)
    connectors = tuple(
        _choose_connector(state, e, policy) for e in range(len(matching) - 1)
    )

    edges = matching + connectors
    _assert_tree(len(pts), edges)

    return BastResult(
        tuple(pts),
        edges,
        matching,
        connectors,
        tuple(state.orientations()),
        sum(distance(pts[a], pts[b]) for a, b in edges),
        path_weight,
        choice=choice,
        trace=tuple(state.trace),
        counters=counters or WorkCounters(),
    )


def devirtualize(result: BastResult, augmentation: VirtualAugmentation) -> BastResult:
    """Remove the virtual points (and their matching edges) from a tree.

    If a connector ends at a virtual point, it is moved to the real twin, which is
    then centered towards the connector's far end.
    """

    if not augmentation:
        return result

    pts = result.points
    virtual = {vp.virtual: vp.real for vp in augmentation.virtual_points}
    n = len(pts) - len(virtual)

    orientations = list(result.orientations[:n])
    trace = list(result.trace)
    connectors: list[_Edge] = []

    for a, b in result.connectors:
        if a not in virtual and b not in virtual:
            connectors.append((a, b))
            continue

        p, w = (virtual[a], b) if a in virtual else (virtual[b], a)

        if not result.orientations[w].cone(pts[w]).contains(pts[p]):
            raise exc.DevirtualizeFailed(
                f"Vertex {p} is not in the cone of {w}, which was oriented to its twin"
            )

        prov = Provenance(Phase.DEVIRTUALIZE, None)
        orientations[p] = VertexOrientation(
            ConeKind.CENTER,
            w,
            direction(pts[p], pts[w]),
            (*orientations[p].provenance, prov),
        )
        trace.append(TraceEntry(Phase.DEVIRTUALIZE, p, ConeKind.CENTER))
        connectors.append(_key(p, w))

    for p in virtual.values():
        if orientations[p].partner in virtual:
            orientations[p] = replace(orientations[p], partner=None)

    matching = tuple(e for e in result.matching if not set(e) & virtual.keys())
    edges = matching + tuple(connectors)
    _assert_tree(n, edges)

    devirtualized = replace(
        result,
        points=pts[:n],
        edges=edges,
        matching=matching,
        connectors=tuple(connectors),
        orientations=tuple(orientations),
        weight=sum(distance(pts[a], pts[b]) for a, b in edges),
        trace=tuple(trace),
    )

    for p in virtual.values():
        for v in {p} | {w for e in connectors for w in e if p in e}:
            if devirtualized.spans[v] > CONE_ANGLE + ANGLE_TOL:
                raise exc.DevirtualizeFailed(
                    f"Vertex {v} spans {devirtualized.spans[v]!r} once devirtualized"
                )

    return devirtualized


#
# The composition
def build_tree_from_instance(
    instance: AugmentedInstance,
    /,
    *,
    phase2_mode: Phase2Mode = Phase2Mode.TWO_ROUND,
    policy: ConnectorPolicy = ConnectorPolicy.SHORTEST,
    path_weight: float = 0.0,
    choice: MatchingChoice = MatchingChoice.FIRST,
) -> BastResult:
    """Run the three phases on a (perfectly) matched instance, and extract the tree."""

    state = OrientationState(instance.points, instance.matching)
    counters = WorkCounters(edges=len(instance.matching))

    phase1(state, counters)
    phase2(state, phase2_mode, counters)
    phase3(state, counters)

    result = extract_tree(
        state, policy, path_weight=path_weight, choice=choice, counters=counters
    )
    return devirtualize(result, instance.augmentation)


def build_tree_from_path(
    path: PathInstance,
    /,
    *,
    matching: MatchingChoice = MatchingChoice.AUTO,
    phase2_mode: Phase2Mode = Phase2Mode.TWO_ROUND,
    policy: ConnectorPolicy = ConnectorPolicy.SHORTEST,
) -> BastResult:
    """Return a 2π/3-spanning tree of the path's points, of weight at most twice the
    path's, in which the endpoints of every path edge are at most 3 hops apart.
    """

    chosen = select_matching(path, matching)
    instance = augment_virtual(path, chosen)

    result = build_tree_from_instance(
        instance,
        phase2_mode=phase2_mode,
        policy=policy,
        path_weight=path.weight,
        choice=chosen.choice,
    )

    _LOGGER.debug(
        f"Built: {result} from {path}, {result.counters.examinations} examinations "
        f"for {len(instance.matching)} matching edges"
    )
    return result
