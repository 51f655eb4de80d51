"""Unit tests for point files and result documents."""

import json

import pytest

from geometry.norm_core import Vector
from parsers.point_parser import (PointFileParser, format_plain, format_structured,
                                  parse_points, parse_structured, read_points, write_diagram,
                                  write_points)
from solvers.elzinga_hearn import solve_eh
from solvers.shamos_hoey import solve_sh
from utils.errors import PointParseError

SAMPLE = """# triangle
-0.5, -1

1 -1
0.25,1
1,  -1
"""


def test_parse_points():
    ps = parse_points(SAMPLE)
    assert list(ps) == [Vector(-0.5, -1), Vector(1, -1), Vector(0.25, 1)]
    assert len(parse_points(SAMPLE, deduplicate=False)) == 4


@pytest.mark.parametrize("text,line", [
    ("0 0\n1\n", 2),
    ("0 0\n# c\n1 2 3\n", 3),
    ("abc, 1\n", 1),
    ("0 0\nnan 1\n", 2),
])
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(PointParseError) as info:
        parse_points(text)
    assert info.value.line_no == line
    assert f"line {line}" in str(info.value)


def test_point_file_parser(tmp_path):
    path = tmp_path / "tri.txt"
    path.write_text(SAMPLE)
    parser = PointFileParser(path)
    assert parser.summary() == {"lines": 6, "comments": 1, "blank": 1, "points": 4}
    assert len(parser.parse()) == 3


def test_write_then_read_points(tmp_path):
    pts = [Vector(0.1, -1 / 3), Vector(1e-17, 2.5)]
    write_points(pts, tmp_path / "p.txt")
    assert list(read_points(tmp_path / "p.txt")) == pts


def test_format_plain(l4):
    text = format_plain(solve_eh(l4, [(-1, 0), (1, 0)]))
    lines = text.splitlines()
    assert lines[0] == "center 0 0 radius 1"
    assert lines[-1] == "iterations 1"
    assert sorted(lines[1:-1]) == ["support -1 0", "support 1 0"]


def test_structured_document_is_exact(l2):
    r = solve_eh(l2, [(0, 0), (2, 0), (1, 5)])
    doc = parse_structured(format_structured(r))
    assert doc["algorithm"] == "elzinga_hearn"
    assert doc["center_x"] == r.center.x
    assert doc["center_y"] == r.center.y
    assert doc["radius"] == r.radius
    assert doc["support"] == r.support
    assert doc["iterations"] == len(r.iterations)


def test_structured_missing_keys():
    with pytest.raises(PointParseError):
        parse_structured("algorithm=eh\nradius=1.0\n")
    with pytest.raises(PointParseError):
        parse_structured("no separator here\n")


def test_write_diagram(l2, tmp_path):
    r = solve_sh(l2, [(0, 0), (2, 0), (1, 5)])
    write_diagram(r.diagram, tmp_path / "d.json")
    data = json.loads((tmp_path / "d.json").read_text())
    assert len(data["sites"]) == 3
    assert data["vertices"][0]["defining"] == [0, 1, 2]
    assert data["vertices"][0]["distance"] == pytest.approx(2.6, abs=1e-8)
    assert len(data["edges"]) == 3
