#!/usr/bin/env python3
"""Tests for bastree - the command-line client."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from bastree.client import EXIT_INPUT, EXIT_OK, cli
from bastree.const import InputFormat
from bastree.document import load_document, load_oracle_document, parse_points

from .helpers import INSTANCES_DIR, POINTS_FILE_NAME

C4_FILE = str(INSTANCES_DIR / "c4_prime" / POINTS_FILE_NAME)
COLLINEAR_4_FILE = str(INSTANCES_DIR / "collinear_4" / POINTS_FILE_NAME)


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def _invoke(runner: CliRunner, *args: str) -> int:
    return runner.invoke(cli, list(args), obj={}).exit_code


def test_build(runner: CliRunner, tmp_path: Path) -> None:
    out = tmp_path / "c4.json"

    assert _invoke(runner, "build", C4_FILE, "--counters", "-o", str(out)) == EXIT_OK

    doc = load_document(out.read_text())
    assert doc["weights"]["tree"] == 6.0
    assert doc["verification"]["passed"]
    assert doc["counters"]["examinations"] == 5
    assert "trace" not in doc


@pytest.mark.parametrize(
    "text",
    ["", "# nothing\n", "0 0\n1\n", "0 0\n1 1\n0 0\n", "0 0\n"],
    ids=["empty", "comment", "bad_line", "duplicates", "one_point"],
)
def test_build_bad_input(runner: CliRunner, tmp_path: Path, text: str) -> None:
    points = tmp_path / "points.txt"
    points.write_text(text)

    assert _invoke(runner, "build", str(points), "-o", str(tmp_path / "x")) == EXIT_INPUT


def test_build_missing_file(runner: CliRunner, tmp_path: Path) -> None:
    missing = str(tmp_path / "missing.txt")
    assert _invoke(runner, "build", missing, "-o", str(tmp_path / "x")) == EXIT_INPUT


def test_build_mst(runner: CliRunner, tmp_path: Path) -> None:
    """Test the MST source writes its order, and a ratio to the MST of at most 4."""

    points, out = tmp_path / "points.txt", tmp_path / "out.json"

    assert _invoke(runner, "gen", "-n", "100", "--seed", "5", "-o", str(points)) == 0
    assert (
        _invoke(runner, "build", str(points), "-s", "mst", "--trace", "-o", str(out))
        == EXIT_OK
    )

    doc = load_document(out.read_text())
    assert doc["source"] == "mst"
    assert sorted(doc["path"]) == list(range(100))
    assert doc["ratios"]["tree_mst"] <= 4.0
    assert doc["trace"]


def test_oracle(runner: CliRunner, tmp_path: Path) -> None:
    tree, out = tmp_path / "tree.json", tmp_path / "oracle.json"

    assert _invoke(runner, "build", COLLINEAR_4_FILE, "-o", str(tree)) == EXIT_OK
    assert (
        _invoke(runner, "oracle", COLLINEAR_4_FILE, "-c", str(tree), "-o", str(out))
        == EXIT_OK
    )

    doc = load_oracle_document(out.read_text())
    assert doc["optimal_weight"] == pytest.approx(5.0)
    assert doc["comparison"]["ratio"] >= 1.0 - 1e-9


def test_oracle_bad_input(runner: CliRunner, tmp_path: Path) -> None:
    points, out = tmp_path / "points.txt", str(tmp_path / "x")

    assert _invoke(runner, "gen", "collinear", "-n", "10", "-o", str(points)) == 0
    assert _invoke(runner, "oracle", str(points), "-o", out) == EXIT_INPUT

    assert _invoke(runner, "oracle", C4_FILE, "--alpha", "0.1", "-o", out) == EXIT_INPUT
    assert _invoke(runner, "oracle", C4_FILE, "--workers", "0", "-o", out) == 2


def test_svg(runner: CliRunner, tmp_path: Path) -> None:
    doc, out = tmp_path / "c4.json", tmp_path / "c4.svg"

    assert _invoke(runner, "build", C4_FILE, "-o", str(doc)) == EXIT_OK
    assert _invoke(runner, "svg", str(doc), "-o", str(out)) == EXIT_OK
    assert out.read_text().count('class="cone"') == 4

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"points": []}))
    assert _invoke(runner, "svg", str(bad), "-o", str(out)) == EXIT_INPUT


def test_gen(runner: CliRunner, tmp_path: Path) -> None:
    """Test the collinear generator reproduces its fixture, and seeds are honoured."""

    out = tmp_path / "collinear.txt"
    assert _invoke(runner, "gen", "collinear", "-n", "8", "-o", str(out)) == EXIT_OK
    assert out.read_text() == (INSTANCES_DIR / "collinear_8" / POINTS_FILE_NAME).read_text()

    texts = []
    for name in ("a.json", "b.json"):
        out = tmp_path / name
        args = ("gen", "-n", "20", "--seed", "42", "-f", "json", "-o", str(out))
        assert _invoke(runner, *args) == EXIT_OK
        texts.append(out.read_text())

    assert texts[0] == texts[1]
    assert len(parse_points(texts[0], InputFormat.JSON)) == 20

    assert _invoke(runner, "gen", "-n", "0") == 2
    assert _invoke(runner, "gen", "collinear", "-n", "3", "--spacing=-1") == 2


def test_bench(runner: CliRunner, tmp_path: Path) -> None:
    out = tmp_path / "bench.tsv"

    assert _invoke(runner, "bench", "-n", "50", "-n", "200", "-o", str(out)) == EXIT_OK

    lines = out.read_text().splitlines()
    assert lines[0].split("\t")[0] == "n"
    assert [line.split("\t")[0] for line in lines[1:]] == ["50", "200"]
    assert all(float(line.split("\t")[3]) <= 6.0 for line in lines[1:])

    assert _invoke(runner, "bench", "-n", "1") == 2
