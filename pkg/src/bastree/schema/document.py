#!/usr/bin/env python3
"""bastree schema - for point files, and the result/oracle documents."""

from __future__ import annotations

import math
from typing import Any

import voluptuous as vol

from .const import (
    CONDITIONS,
    CONE_KINDS,
    MATCHING_CHOICES,
    PHASES,
    SCENARIOS,
    SOURCE_KINDS,
    SZ_ALPHA,
    SZ_BISECTOR,
    SZ_CHECKS,
    SZ_COMPARISON,
    SZ_CONDITION,
    SZ_CONNECTORS,
    SZ_COUNTERS,
    SZ_DUE_EDGE,
    SZ_EDGES,
    SZ_EXAMINATIONS,
    SZ_EXAMINED,
    SZ_FEASIBLE,
    SZ_KIND,
    SZ_MATCHING,
    SZ_MATCHING_EDGES,
    SZ_MST,
    SZ_NAME,
    SZ_OPTIMAL_WEIGHT,
    SZ_ORIENTATIONS,
    SZ_PARTNER,
    SZ_PASSED,
    SZ_PATH,
    SZ_PHASE,
    SZ_PHASE1,
    SZ_PHASE2,
    SZ_PHASE2_ROUNDS,
    SZ_PHASE3,
    SZ_POINTS,
    SZ_RATIO,
    SZ_RATIOS,
    SZ_SCENARIO,
    SZ_SLACK,
    SZ_SOURCE,
    SZ_TRACE,
    SZ_TREE,
    SZ_TREE_EDGES,
    SZ_TREE_MST,
    SZ_TREE_PATH,
    SZ_TREE_WEIGHT,
    SZ_VERIFICATION,
    SZ_VERTEX,
    SZ_WEIGHTS,
    SZ_WITNESSES,
)


def finite(value: Any) -> float:
    """Coerce a JSON number to a finite float."""

    if isinstance(value, bool) or not isinstance(value, int | float):
        raise vol.Invalid(f"expected a number, not {value!r}")
    if not math.isfinite(value):
        raise vol.Invalid(f"expected a finite number, not {value!r}")
    return float(value)


_INDEX = vol.All(int, vol.Range(min=0))
_WEIGHT = vol.All(finite, vol.Range(min=0.0))

SCH_POINT = vol.All([finite], vol.Length(min=2, max=2))
SCH_EDGE = vol.All([_INDEX], vol.Length(min=2, max=2))

#
# A point file (JSON flavour)
SCH_POINTS_JSON = vol.Schema(vol.All([SCH_POINT], vol.Length(min=1)))

#
# The result of a build
SCH_ORIENTATION = vol.Schema(
    {
        vol.Required(SZ_KIND): vol.In(CONE_KINDS),
        vol.Required(SZ_BISECTOR): finite,
        vol.Required(SZ_PARTNER): vol.Any(None, _INDEX),
    },
    extra=vol.PREVENT_EXTRA,
)

SCH_WEIGHTS = vol.Schema(
    {
        vol.Required(SZ_PATH): _WEIGHT,
        vol.Required(SZ_MST): vol.Any(None, _WEIGHT),
        vol.Required(SZ_TREE): _WEIGHT,
    },
    extra=vol.PREVENT_EXTRA,
)

SCH_RATIOS = vol.Schema(
    {
        vol.Required(SZ_TREE_PATH): vol.Any(None, _WEIGHT),
        vol.Required(SZ_TREE_MST): vol.Any(None, _WEIGHT),
    },
    extra=vol.PREVENT_EXTRA,
)

SCH_CHECK = vol.Schema(
    {
        vol.Required(SZ_NAME): str,
        vol.Required(SZ_PASSED): bool,
        vol.Required(SZ_WITNESSES): [vol.Any(str, int, [int])],
        vol.Required(SZ_SLACK): vol.Any(None, finite),
    },
    extra=vol.PREVENT_EXTRA,
)

SCH_VERIFICATION = vol.Schema(
    {
        vol.Required(SZ_PASSED): bool,
        vol.Required(SZ_CHECKS): [SCH_CHECK],
    },
    extra=vol.PREVENT_EXTRA,
)

SCH_TRACE_ENTRY = vol.Schema(
    {
        vol.Required(SZ_PHASE): vol.In(PHASES),
        vol.Required(SZ_VERTEX): _INDEX,
        vol.Required(SZ_KIND): vol.In(CONE_KINDS),
        vol.Required(SZ_DUE_EDGE): vol.Any(None, _INDEX),
        vol.Required(SZ_CONDITION): vol.Any(None, vol.In(CONDITIONS)),
        vol.Required(SZ_SCENARIO): vol.Any(None, vol.In(SCENARIOS)),
    },
    extra=vol.PREVENT_EXTRA,
)

SCH_COUNTERS = vol.Schema(
    {
        vol.Required(SZ_PHASE1): _INDEX,
        vol.Required(SZ_PHASE2): _INDEX,
        vol.Required(SZ_PHASE3): _INDEX,
        vol.Required(SZ_PHASE2_ROUNDS): _INDEX,
        vol.Required(SZ_EXAMINATIONS): _INDEX,
    },
    extra=vol.PREVENT_EXTRA,
)

SCH_OUTPUT_DOCUMENT = vol.Schema(
    {
        vol.Required(SZ_SOURCE): vol.In(SOURCE_KINDS),
        vol.Required(SZ_MATCHING): vol.In(MATCHING_CHOICES),
        vol.Required(SZ_POINTS): [SCH_POINT],  # in path order
        vol.Required(SZ_PATH): [_INDEX],  # the input index of each point
        vol.Required(SZ_TREE_EDGES): [SCH_EDGE],
        vol.Required(SZ_MATCHING_EDGES): [SCH_EDGE],
        vol.Required(SZ_CONNECTORS): [SCH_EDGE],
        vol.Required(SZ_ORIENTATIONS): [SCH_ORIENTATION],
        vol.Required(SZ_WEIGHTS): SCH_WEIGHTS,
        vol.Required(SZ_RATIOS): SCH_RATIOS,
        vol.Required(SZ_VERIFICATION): SCH_VERIFICATION,
        vol.Optional(SZ_TRACE): [SCH_TRACE_ENTRY],
        vol.Optional(SZ_COUNTERS): SCH_COUNTERS,
    },
    extra=vol.PREVENT_EXTRA,
)

#
# The result of the oracle
SCH_COMPARISON = vol.Schema(
    {
        vol.Required(SZ_TREE_WEIGHT): _WEIGHT,
        vol.Required(SZ_RATIO): _WEIGHT,
    },
    extra=vol.PREVENT_EXTRA,
)

SCH_ORACLE_DOCUMENT = vol.Schema(
    {
        vol.Required(SZ_ALPHA): finite,
        vol.Required(SZ_POINTS): [SCH_POINT],
        vol.Required(SZ_OPTIMAL_WEIGHT): _WEIGHT,
        vol.Required(SZ_EDGES): [SCH_EDGE],
        vol.Required(SZ_EXAMINED): _INDEX,
        vol.Required(SZ_FEASIBLE): _INDEX,
        vol.Optional(SZ_COMPARISON): SCH_COMPARISON,
    },
    extra=vol.PREVENT_EXTRA,
)
