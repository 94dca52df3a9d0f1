#!/usr/bin/env python3
"""bastree schema - for point files and result documents."""

from __future__ import annotations

from .const import (  # noqa: F401
    CONDITIONS,
    CONE_KINDS,
    MATCHING_CHOICES,
    PHASES,
    SCENARIOS,
    SOURCE_KINDS,
    Condition,
    ConeKind,
    Phase,
    RegionId,
    Scenario,
)
from .document import (  # noqa: F401
    SCH_ORACLE_DOCUMENT,
    SCH_OUTPUT_DOCUMENT,
    SCH_POINTS_JSON,
)
from .typing import _DocDictT  # noqa: F401
