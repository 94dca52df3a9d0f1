#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
"""bastree - the exception hierarchy."""

from __future__ import annotations


class BastBaseError(Exception):
    """The base exception class for bastree."""

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class BastError(BastBaseError):
    """The base exception class for bastree."""


#
# Geometry primitives
class GeometryError(BastError):
    """A planar predicate was invoked with degenerate arguments."""


class CoincidentPoints(GeometryError):
    """Two points that must be distinct coincide (no direction between them)."""


class DuplicatePoint(CoincidentPoints):
    """The query point coincides with an endpoint of the segment."""


class DegenerateSegment(CoincidentPoints):
    """The endpoints of a segment coincide (no partition of the plane)."""


class ApexQuery(CoincidentPoints):
    """The query point coincides with the apex of a cone."""


class EmptyInput(GeometryError):
    """An operation that needs at least one element was given none."""


#
# Orientation state
class OrientationError(BastError):
    """An orientation assignment broke one of the assignment rules."""


class ReorientAttempt(OrientationError):
    """A vertex that already has an orientation was assigned another one."""


class NonCenterFirst(OrientationError):
    """The first vertex of a matching edge to be oriented must get a center cone."""


class UnorientedVertex(OrientationError):
    """The operation needs every vertex to be oriented, but some are not."""


#
# Caller input
class InvalidInput(BastError):
    """The supplied instance or parameter(s) is/are invalid."""


class PathTooShort(InvalidInput):
    """A path needs at least two points."""


class DuplicatePoints(InvalidInput):
    """The point set (or two consecutive points of a path) has duplicates."""


class TooLarge(InvalidInput):
    """The instance is too large for exhaustive enumeration."""


class InvalidParameter(InvalidInput):
    """The supplied parameter(s) is/are invalid (e.g. an out-of-range alpha)."""


class InvalidSchema(InvalidInput):
    """A point file or a result document is malformed."""


#
# Internal guarantees (these firing indicates a defect)
class AlgorithmInvariantViolation(BastError):
    """A guarantee of the construction did not hold."""


class AtMostOneViolation(AlgorithmInvariantViolation):
    """Both vertices of an edge were centered due to the same neighbouring edge."""


class NonTermination(AlgorithmInvariantViolation):
    """The fixpoint iteration of the second phase did not settle."""


class NotATree(AlgorithmInvariantViolation):
    """The edge set is not a spanning tree of the vertex set."""


class AugmentationFailed(AlgorithmInvariantViolation):
    """A virtual point could not be placed in the region of its real twin."""


class DevirtualizeFailed(AlgorithmInvariantViolation):
    """A virtual point could not be replaced by its real twin."""


class InfeasibleUnexpected(AlgorithmInvariantViolation):
    """No feasible tree was found, although one always exists for this alpha."""
