#!/usr/bin/env python3
"""bastree - library-wide constants."""

from math import pi
from typing import Final

from .schema.const import (  # noqa: F401
    Condition as Condition,
    ConeKind as ConeKind,
    ConnectorPolicy as ConnectorPolicy,
    Generator as Generator,
    InputFormat as InputFormat,
    MatchingChoice as MatchingChoice,
    MstMethod as MstMethod,
    Phase as Phase,
    Phase2Mode as Phase2Mode,
    RegionId as RegionId,
    Scenario as Scenario,
    SourceKind as SourceKind,
)

TWO_PI: Final = 2.0 * pi

CONE_ANGLE: Final = 2.0 * pi / 3.0  # the transmission cone, alpha
HALF_ANGLE: Final = pi / 3.0  # also the half-angle of the side regions

ANGLE_TOL: Final = 1e-9  # radians, used by all containment tests
WEIGHT_TOL: Final = 1e-9  # absolute, used by the weight bounds

# points closer than this multiple of the instance diameter are duplicates
DUPLICATE_REL_TOL: Final = 1e-12

# points within this many ulps of each other (per coordinate) have no bearing
COINCIDENT_ULPS: Final = 4

# a virtual point sits this multiple of its local feature size from its twin
VIRTUAL_EPS_FACTOR: Final = 1e-9
VIRTUAL_EPS_SHRINK: Final = 1e3

ORACLE_ALPHA: Final = CONE_ANGLE
ORACLE_MAX_N: Final = 9
ORACLE_MIN_ALPHA: Final = pi / 3.0  # below this an alpha-ST may not exist

DENSE_MST_MAX_N: Final = 2000  # MstMethod.AUTO switches to Delaunay above this

SVG_WEDGE_FACTOR: Final = 0.3  # x median edge length
SVG_MARGIN_FACTOR: Final = 0.05  # x bounding box extent
