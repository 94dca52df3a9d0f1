#!/usr/bin/env python3
"""bastree schema - shared constants."""

from __future__ import annotations

from enum import EnumCheck, StrEnum, verify
from typing import Final

# These are used as keys of the result/oracle documents
SZ_ALPHA: Final = "alpha"
SZ_BISECTOR: Final = "bisector"
SZ_CHECKS: Final = "checks"
SZ_COMPARISON: Final = "comparison"
SZ_CONDITION: Final = "condition"
SZ_CONNECTORS: Final = "connectors"
SZ_COUNTERS: Final = "counters"
SZ_DUE_EDGE: Final = "due_edge"
SZ_EDGES: Final = "edges"
SZ_EXAMINATIONS: Final = "examinations"
SZ_EXAMINED: Final = "examined"
SZ_FEASIBLE: Final = "feasible"
SZ_KIND: Final = "kind"
SZ_MATCHING: Final = "matching"
SZ_MATCHING_EDGES: Final = "matching_edges"
SZ_MST: Final = "mst"
SZ_NAME: Final = "name"
SZ_OPTIMAL_WEIGHT: Final = "optimal_weight"
SZ_ORIENTATIONS: Final = "orientations"
SZ_PARTNER: Final = "partner"
SZ_PASSED: Final = "passed"
SZ_PATH: Final = "path"
SZ_PHASE: Final = "phase"
SZ_PHASE1: Final = "phase1"
SZ_PHASE2: Final = "phase2"
SZ_PHASE3: Final = "phase3"
SZ_PHASE2_ROUNDS: Final = "phase2_rounds"
SZ_POINTS: Final = "points"
SZ_RATIO: Final = "ratio"
SZ_RATIOS: Final = "ratios"
SZ_SCENARIO: Final = "scenario"
SZ_SLACK: Final = "slack"
SZ_SOURCE: Final = "source"
SZ_TRACE: Final = "trace"
SZ_TREE: Final = "tree"
SZ_TREE_EDGES: Final = "tree_edges"
SZ_TREE_MST: Final = "tree_mst"
SZ_TREE_PATH: Final = "tree_path"
SZ_TREE_WEIGHT: Final = "tree_weight"
SZ_VERIFICATION: Final = "verification"
SZ_VERTEX: Final = "vertex"
SZ_WEIGHTS: Final = "weights"
SZ_WITNESSES: Final = "witnesses"


@verify(EnumCheck.UNIQUE)
class RegionId(StrEnum):
    R1 = "R1"  # side region adjacent to the first point
    R2 = "R2"  # center region, left of the directed segment
    R3 = "R3"  # side region adjacent to the second point
    R4 = "R4"  # center region, right of the directed segment

    def flip(self) -> RegionId:
        """Return the id of this region when the segment's endpoints are swapped."""
        return _FLIPPED[self]


_FLIPPED: Final = {
    RegionId.R1: RegionId.R3,
    RegionId.R2: RegionId.R4,
    RegionId.R3: RegionId.R1,
    RegionId.R4: RegionId.R2,
}


@verify(EnumCheck.UNIQUE)
class ConeKind(StrEnum):
    CENTER = "center"
    UP = "up"
    DOWN = "down"


@verify(EnumCheck.UNIQUE)
class Phase(StrEnum):
    I = "I"  # noqa: E741
    II = "II"
    III = "III"
    CLEANUP = "cleanup"
    DEVIRTUALIZE = "devirtualize"


@verify(EnumCheck.UNIQUE)
class Condition(StrEnum):
    FIRST = "first"
    SECOND = "second"


@verify(EnumCheck.UNIQUE)
class Scenario(StrEnum):
    FIRST = "first"  # center + non-center, oriented towards each other
    SECOND = "second"  # non-center, towards an already centered vertex
    THIRD = "third"  # two non-center kinds, towards each other
    OTHER = "other"


@verify(EnumCheck.UNIQUE)
class MatchingChoice(StrEnum):
    AUTO = "auto"
    FIRST = "first"  # {p1,p2},{p3,p4},...
    SECOND = "second"  # {p2,p3},{p4,p5},...


@verify(EnumCheck.UNIQUE)
class Phase2Mode(StrEnum):
    TWO_ROUND = "two_round"
    REFERENCE = "reference"


@verify(EnumCheck.UNIQUE)
class ConnectorPolicy(StrEnum):
    SHORTEST = "shortest"
    FIRST = "first"


@verify(EnumCheck.UNIQUE)
class SourceKind(StrEnum):
    PATH = "path"
    MST = "mst"


@verify(EnumCheck.UNIQUE)
class InputFormat(StrEnum):
    TEXT = "text"
    JSON = "json"


@verify(EnumCheck.UNIQUE)
class MstMethod(StrEnum):
    AUTO = "auto"
    DENSE = "dense"
    DELAUNAY = "delaunay"


@verify(EnumCheck.UNIQUE)
class Generator(StrEnum):
    UNIFORM = "uniform"
    COLLINEAR = "collinear"


# these are for voluptuous's vol.In()
CONE_KINDS = tuple(x.value for x in ConeKind)
CONDITIONS = tuple(x.value for x in Condition)
MATCHING_CHOICES = tuple(x.value for x in MatchingChoice if x != MatchingChoice.AUTO)
PHASES = tuple(x.value for x in Phase)
SCENARIOS = tuple(x.value for x in Scenario)
SOURCE_KINDS = tuple(x.value for x in SourceKind)
