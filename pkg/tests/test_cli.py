import io
import json
import re
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from _oracles import planar_cell, vec
from lazyvor.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_classify_lattice():
    code, out, _ = run("classify", "--preset", "lattice-z2", "--point", "0,0")
    doc = json.loads(out)
    assert code == 0 and doc["kind"] == "inner" and doc["point"] == ["0", "0"]


def test_cell_p1_is_non_polyhedral():
    code, out, _ = run("cell", "--preset", "p1", "--point", "1,0")
    assert code == 0 and json.loads(out)["kind"] == "non_polyhedral"


def test_cell_lattice_json():
    code, out, _ = run("cell", "--preset", "lattice-z2", "--point", "0,0")
    doc = json.loads(out)
    assert doc["kind"] == "polytope"
    assert {tuple(v) for v in doc["vrep"]["vertices"]} == {
        ("-1/2", "-1/2"), ("-1/2", "1/2"), ("1/2", "-1/2"), ("1/2", "1/2")}


def test_cell_truncated_with_svg(tmp_path):
    svg = tmp_path / "cell.svg"
    code, out, _ = run("cell", "--preset", "p1", "--point", "1,0", "--truncate", "-2,-5,2,5",
                       "--svg", str(svg))
    doc = json.loads(out)
    assert code == 0 and doc["kind"] == "truncated"
    assert doc["certificate"]["site_facets"] == 5
    assert svg.read_text().count("<path") == 1


def test_svg_of_a_non_polyhedral_cell_is_refused(tmp_path):
    code, _, err = run("cell", "--preset", "p1", "--point", "1,0", "--svg", str(tmp_path / "x.svg"))
    assert code == 1 and "--truncate" in err


def test_cone_report():
    code, out, _ = run("cone", "--preset", "p1", "--point", "1,0", "--radius-sq", "25/4",
                       "--stabilize-to", "25")
    doc = json.loads(out)
    assert code == 0 and doc["fullspace"] is False and doc["stabilized"] is False
    assert sorted(doc["extreme_generators"]) == [["-1", "-2"], ["-1", "2"]]


def test_preset_roundtrip(tmp_path):
    spec = tmp_path / "p2.json"
    assert run("preset", "p2", "--out", str(spec))[0] == 0
    code, out, _ = run("classify", "--source", str(spec), "--point", "1,0")
    assert code == 0 and json.loads(out)["kind"] == "inner"


@pytest.mark.parametrize("argv,code,fragment", [
    (["cell", "--preset", "p1", "--point", "1,1"], 1, "NotAMemberError"),
    (["cell", "--preset", "p1", "--point", "1,x"], 2, "rational"),
    (["cell", "--preset", "p1", "--point", "1,0,0"], 2, "--point"),
    (["cell", "--preset", "p9", "--point", "1,0"], 2, "unknown preset"),
    (["cell", "--source", "/nonexistent.json", "--point", "1,0"], 2, "cannot read"),
    (["frobnicate"], 2, "invalid choice"),
    (["cell", "--preset", "p1", "--point", "1,0", "--truncate", "2,2,3,3"], 1, "GeometryError"),
])
def test_exit_codes(argv, code, fragment):
    got, _, err = run(*argv)
    assert got == code and fragment in err


def test_bad_spec_file_is_a_spec_error(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dimension": 2, "parts": [{"kind": "finite", "points": [["1"]]}]}')
    code, _, err = run("classify", "--source", str(bad), "--point", "1")
    assert code == 2 and "lazyvor: error:" in err


def _path_vertices(line):
    d = re.search(r'd="M ([^"]*) Z"', line).group(1)
    return [tuple(Fraction(x) for x in pair.split()) for pair in d.split(" L ")]


def test_p1_diagram_golden(tmp_path):
    svg = tmp_path / "fig1.svg"
    code, out, _ = run("diagram", "--preset", "p1", "--window", "-2,-6,2,6", "--out", str(svg))
    assert code == 0
    text = svg.read_text()
    assert text == (FIXTURES / "p1_window.svg").read_text()

    doc = json.loads(out)
    (cell,) = [c for c in doc["cells"] if c["site"] == ["1", "0"]]
    sites = [vec(0, z) for z in range(-40, 41)] + [vec(1, 0)]
    verts, rel, box_edges = planar_cell(vec(1, 0), sites, (-2, -6, 2, 6))
    assert cell["site_facets"] == len(rel) and cell["box_facets"] == box_edges
    # the last path is the cell of (1, 0); map the oracle polygon to the canvas
    last = [line for line in text.splitlines() if "<path" in line][-1]
    scale = 50
    expected = {((x + 2) * scale, (6 - y) * scale) for x, y in verts}
    assert set(_path_vertices(last)) == expected


def test_cli_is_deterministic(tmp_path):
    outs = []
    for i in range(2):
        svg = tmp_path / f"d{i}.svg"
        proc = subprocess.run(
            [sys.executable, "-m", "lazyvor", "diagram", "--preset", "p2", "--window", "-4,-3,4,3",
             "--out", str(svg)], capture_output=True, check=True)
        outs.append((proc.stdout.replace(str(svg).encode(), b"SVG"), svg.read_bytes()))
    assert outs[0] == outs[1]
