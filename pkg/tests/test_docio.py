"""Document parsing, linkage round-trips and trace CSV."""

import io
import json
from fractions import Fraction

import pytest

from test_verify import ellipse_linkage, viviani_linkage

from scissorlink.docio import (
    CurveSpec,
    TRACE_HEADER,
    dump_linkage_doc,
    linkage_from_doc,
    linkage_to_doc,
    load_curve_spec,
    parse_curve_spec,
    read_trace,
    write_trace,
)
from scissorlink.errors import SpecParseError
from scissorlink.motion import curve_load
from scissorlink.verify import INFINITY, check_loop_closure, check_trajectory

VIVIANI_SPEC = {
    "x0": ["1", "0", "2", "0", "1"],
    "x1": ["0", "0", "-4"],
    "x2": ["0", "2", "0", "-2"],
    "x3": ["0", "2", "0", "2"],
    "mode": "spherical",
    "m0": ["0", "0", "1/2", "0", "0", "0", "0", "0"],
}


class TestCurveSpec:
    def test_parse(self):
        spec = parse_curve_spec(VIVIANI_SPEC)
        curve = curve_load(*spec.coords)
        assert (curve.degree, curve.circularity) == (4, 2)
        assert spec.mode == "spherical"
        assert spec.m0.dual.y == Fraction(0)
        assert spec.m0.primal.y == Fraction(1, 2)
        assert spec.seed == 0

    def test_positioned_errors(self):
        with pytest.raises(SpecParseError, match=r"x1\[1\]"):
            parse_curve_spec({**VIVIANI_SPEC, "x1": ["0", "nope"]})
        with pytest.raises(SpecParseError, match="x2: missing"):
            parse_curve_spec({k: v for k, v in VIVIANI_SPEC.items() if k != "x2"})
        with pytest.raises(SpecParseError, match="mode"):
            parse_curve_spec({**VIVIANI_SPEC, "mode": "helical"})
        with pytest.raises(SpecParseError, match="m0: expected 8"):
            parse_curve_spec({**VIVIANI_SPEC, "m0": ["1", "2"]})
        with pytest.raises(SpecParseError, match="seed"):
            parse_curve_spec({**VIVIANI_SPEC, "seed": "zero"})

    def test_floats_rejected(self):
        with pytest.raises(SpecParseError):
            parse_curve_spec({**VIVIANI_SPEC, "x1": [0.5]})

    def test_invalid_json_positioned(self):
        with pytest.raises(SpecParseError, match="line 1"):
            load_curve_spec(io.StringIO("{not json"))


class TestLinkageDoc:
    def test_round_trip_exact(self):
        for build in (viviani_linkage, ellipse_linkage):
            linkage, curve, _ = build()
            doc = linkage_to_doc(linkage, curve, "test")
            out = io.StringIO()
            dump_linkage_doc(doc, out)
            reparsed = linkage_from_doc(json.loads(out.getvalue()))
            assert reparsed == linkage
            check_trajectory(reparsed, curve)
            check_loop_closure(reparsed)

    def test_metadata(self):
        linkage, curve, _ = viviani_linkage()
        doc = linkage_to_doc(linkage, curve, "spherical")
        assert doc["metadata"] == {
            "d": 4, "c": 2, "n": 2, "mode": "spherical",
            "counts": {"links": 6, "joints": 7},
            "bounds": {"links": 6, "joints": 7}}
        assert all(isinstance(v, str)
                   for j in doc["joints"] for v in j["quaternion"])

    def test_tampered_axis_rejected(self):
        linkage, curve, _ = viviani_linkage()
        doc = linkage_to_doc(linkage, curve, "spherical")
        doc["joints"][0]["pluecker"][3] = "7"
        with pytest.raises(SpecParseError, match="axis"):
            linkage_from_doc(doc)


class TestTrace:
    def test_rows(self):
        rows = [(Fraction(1), (Fraction(-1), Fraction(0), Fraction(1))),
                (INFINITY, (Fraction(1, 3), Fraction(0), Fraction(0)))]
        out = io.StringIO()
        write_trace(out, rows)
        text = out.getvalue().splitlines()
        assert text[0] == ",".join(TRACE_HEADER)
        assert text[1] == "1,-1,0,1,-1,0,1"
        assert text[2].startswith("inf,1/3,0,0,0.333333333333,")
        assert read_trace(io.StringIO(out.getvalue()))[0] == rows[0]

    def test_twelve_significant_digits(self):
        out = io.StringIO()
        write_trace(out, [(Fraction(0), (Fraction(1, 7), Fraction(0), Fraction(0)))])
        assert "0.142857142857" in out.getvalue()

    def test_empty_is_header_only(self):
        out = io.StringIO()
        write_trace(out, [])
        assert out.getvalue() == ",".join(TRACE_HEADER) + "\n"
