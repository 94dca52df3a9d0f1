#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
"""bastree builds bounded-angle spanning trees of planar point sets.

Every point gets one 2π/3 cone, and the tree uses only edges that each endpoint's
cone covers. From a spanning path the tree weighs at most twice the path, and from a
Euclidean MST at most four times the MST.
"""

from .builder import BastResult, WorkCounters, build_tree_from_path  # noqa: F401
from .exceptions import (  # noqa: F401
    AlgorithmInvariantViolation,
    BastError,
    DuplicatePoints,
    GeometryError,
    InvalidInput,
    InvalidParameter,
    InvalidSchema,
    OrientationError,
    PathTooShort,
    TooLarge,
)
from .geom import Point, angular_span, as_points, classify_region  # noqa: F401
from .matching import PathInstance, augment_virtual, select_matching  # noqa: F401
from .oracle import (  # noqa: F401
    OracleConfig,
    OracleResult,
    alpha_mst_bruteforce,
    tree_alpha_feasible,
)
from .orientation import OrientationState, TransmissionGraph  # noqa: F401
from .pipeline import ApproxResult, approx_bast, euclidean_mst  # noqa: F401
from .verify import VerificationReport, verify_result  # noqa: F401

__version__ = "0.1.0"
