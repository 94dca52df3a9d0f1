#!/usr/bin/env python3
"""Tests for bastree - helper functions."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import pytest

from bastree.document import parse_points
from bastree.geom import Point

TEST_DIR = Path(__file__).resolve().parent
INSTANCES_DIR = TEST_DIR / "instances"

POINTS_FILE_NAME = "points.txt"
EXPECTED_FILE_NAME = "expected.json"


def instance_folders() -> list[Path]:
    return sorted(
        p for p in INSTANCES_DIR.glob("*") if p.is_dir() and not p.name.startswith("_")
    )


def load_points(folder: Path) -> list[Point]:
    with open(folder.joinpath(POINTS_FILE_NAME)) as f:
        return parse_points(f.read())


def load_expected(folder: Path) -> dict[str, Any]:
    if not folder.joinpath(EXPECTED_FILE_NAME).is_file():
        pytest.skip(f"No {EXPECTED_FILE_NAME} in: {folder.name}")

    with open(folder.joinpath(EXPECTED_FILE_NAME)) as f:
        return json.load(f)  # type: ignore[no-any-return]


def edge_set(edges: Any) -> set[tuple[int, int]]:
    return {(min(a, b), max(a, b)) for a, b in edges}
