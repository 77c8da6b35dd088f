"""Smoke tests for the python extension module."""

import json
import os
import sys

module_dir = os.environ.get("PUISEUX_MODULE_DIR")
if module_dir:
    sys.path.insert(0, module_dir)

import _puiseux as px  # noqa: E402

EQ1 = "4*x^2*y + (x^2*y + x*y^2 + x*y + y)^2 - z^2"
EQ2 = "x + y - (1+x+y)*z"


def test_expand_quadratic_example():
    branches = px.expand(EQ1, ["x", "y"], "z", ["0", "2", "0"], ["0", "0", "2"],
                         "(-sqrt(2),-1)", 2)
    truncs = sorted(b["truncation"] for b in branches)
    assert truncs == ["-x*y - y", "x*y + y"]
    for b in branches:
        assert not b["finished"]
        assert b["multiplicity"] == 1


def test_admissible_edges():
    edges = px.admissible_edges(EQ1, ["x", "y"], "z")
    assert len(edges) == 4
    slopes = {e["slope"] for e in edges}
    assert "(0,-1)" in slopes


def test_encode_refine_validate_roundtrip():
    encs = px.encode(EQ2, ["x", "y"], "z", ["0", "0", "1"], ["1", "0", "0"],
                     "(-1+1/2*sqrt(2),-2)")
    assert len(encs) == 1
    enc = encs[0]
    assert px.validate(enc)
    refined = px.refine(enc, 7)
    data = json.loads(refined)
    assert len(data["truncation"]) == 7
    assert px.refine(refined, 7) == refined


def test_equal_example_pair():
    ex = px.encode(EQ2, ["x", "y"], "z", ["0", "0", "1"], ["1", "0", "0"],
                   "(-1+1/2*sqrt(2),-2)")[0]
    ey = px.encode(EQ2, ["x", "y"], "z", ["0", "0", "1"], ["0", "1", "0"],
                   "(-2+1/2*sqrt(2),-1)")[0]
    verdict = px.equal(ex, ey)
    assert verdict["verdict"] == "equal"
    assert verdict["certificate"]["sum_line_free"] is True

    b1, b2 = px.encode(EQ1, ["x", "y"], "z", ["0", "2", "0"], ["0", "0", "2"],
                       "(-sqrt(2),-1)")
    assert px.equal(b1, b2)["verdict"] == "not-equal"


def test_support_hull():
    enc = px.encode(EQ2, ["x", "y"], "z", ["0", "0", "1"], ["1", "0", "0"],
                    "(-1+1/2*sqrt(2),-2)")[0]
    hull = px.support_hull(enc)
    verts = sorted(v["vertex"] for v in hull["vertices"])
    assert verts == ["(0,1)", "(1,0)"]
    assert all(v["verified"] for v in hull["vertices"])
    assert ["(0,1)", "(1,0)"] in hull["bounded_faces"] or \
           ["(1,0)", "(0,1)"] in hull["bounded_faces"]


def test_combine_geometric():
    g = px.encode("(1-x)*y - 1", ["x"], "y", ["0", "0"], ["0", "1"], "(-1)")[0]
    summed = px.combine(g, g, "add", "(-1)")
    assert summed["status"] == "combined"
    data = json.loads(summed["encoding"])
    assert data["truncation"][0]["coeff"] == "2"

    inv = px.combine(g, g, "reciprocal", "(-1)")
    assert inv["status"] == "combined"
    assert json.loads(inv["encoding"])["annihilator"].replace(" ", "") == "x+y-1"


def test_svg():
    enc = px.encode(EQ2, ["x", "y"], "z", ["0", "0", "1"], ["1", "0", "0"],
                    "(-1+1/2*sqrt(2),-2)")[0]
    svg = px.render_svg(enc)
    assert svg.startswith("<svg")
    assert svg == px.render_svg(enc)


def test_errors_surface_as_python_exceptions():
    try:
        px.expand("x +", ["x", "y"], "z", ["0", "0", "0"], ["0", "0", "1"], "(-1,-1)")
        raise AssertionError("expected PuiseuxError")
    except px.PuiseuxError:
        pass
