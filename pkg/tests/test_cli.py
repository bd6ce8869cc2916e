"""End-to-end command line pipeline: outputs, exit codes, determinism."""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from scissorlink.cli import main

VIVIANI = {
    "x0": ["1", "0", "2", "0", "1"],
    "x1": ["0", "0", "-4"],
    "x2": ["0", "2", "0", "-2"],
    "x3": ["0", "2", "0", "2"],
    "mode": "spherical",
    "m0": ["0", "0", "1/2", "0", "0", "0", "0", "0"],
}
ELLIPSE = {
    "x0": ["1", "0", "1"],
    "x1": ["-4"],
    "x2": ["0", "-2"],
    "x3": ["0"],
    "mode": "planar",
    "m0": ["0", "0", "0", "-2", "0", "0", "-1", "0"],
    "directions": [["0", "0", "1"]],
}
UNBOUNDED = {"x0": ["-1", "0", "1"], "x1": ["1"], "x2": ["0"], "x3": ["0"]}
# norm has an irreducible quartic factor: splitting needs a field extension
QUARTIC = {"x0": ["2", "0", "4", "0", "1"], "x1": ["1"], "x2": ["0"], "x3": ["0"]}


def _write(path, doc):
    Path(path).write_text(json.dumps(doc))


@pytest.fixture()
def runner():
    return CliRunner()


class TestSynth:
    def test_viviani_outputs(self, runner, tmp_path):
        _write(tmp_path / "spec.json", VIVIANI)
        result = runner.invoke(main, ["synth", str(tmp_path / "spec.json"),
                                      "--out-dir", str(tmp_path / "out")])
        assert result.exit_code == 0, result.output
        for name in ("linkage.json", "trace.csv", "report.txt",
                     "curve.png", "linkage.png"):
            assert (tmp_path / "out" / name).exists(), name
        # [PAPER] 6 links, 7 joints, all axes through the origin
        doc = json.loads((tmp_path / "out" / "linkage.json").read_text())
        assert doc["metadata"]["counts"] == {"links": 6, "joints": 7}
        assert "cell 1: Spherical" in result.output
        trace = (tmp_path / "out" / "trace.csv").read_text().splitlines()
        assert "1,-1,0,1" in trace[-4] or any(
            row.startswith("1,-1,0,1") for row in trace)
        assert trace[-1].startswith("inf,")

    def test_ellipse_planar(self, runner, tmp_path):
        _write(tmp_path / "spec.json", ELLIPSE)
        result = runner.invoke(main, ["synth", str(tmp_path / "spec.json"),
                                      "--out-dir", str(tmp_path / "out")])
        assert result.exit_code == 0, result.output
        doc = json.loads((tmp_path / "out" / "linkage.json").read_text())
        # [PAPER] 8 links and 10 joints
        assert doc["metadata"]["counts"] == {"links": 8, "joints": 10}
        assert "PlanarAntiparallelogram" in result.output

    def test_deterministic(self, runner, tmp_path):
        _write(tmp_path / "spec.json", VIVIANI)
        for d in ("a", "b"):
            result = runner.invoke(main, ["synth", str(tmp_path / "spec.json"),
                                          "--out-dir", str(tmp_path / d)])
            assert result.exit_code == 0
        for name in ("linkage.json", "trace.csv", "report.txt",
                     "curve.png", "linkage.png"):
            assert ((tmp_path / "a" / name).read_bytes()
                    == (tmp_path / "b" / name).read_bytes()), name

    def test_unbounded_exit_2(self, runner, tmp_path):
        _write(tmp_path / "spec.json", UNBOUNDED)
        result = runner.invoke(main, ["synth", str(tmp_path / "spec.json"),
                                      "--out-dir", str(tmp_path / "out")])
        assert result.exit_code == 2
        assert "Unbounded at stage curve_load" in result.output

    def test_factorization_failure_exit_3(self, runner, tmp_path):
        _write(tmp_path / "spec.json", QUARTIC)
        result = runner.invoke(main, ["synth", str(tmp_path / "spec.json"),
                                      "--out-dir", str(tmp_path / "out")])
        assert result.exit_code == 3
        assert "stage factor" in result.output

    def test_search_exhausted_exit_4(self, runner, tmp_path):
        # parallel axes have no common point: spherical mode cannot recentre
        spec = {k: v for k, v in ELLIPSE.items()
                if k in ("x0", "x1", "x2", "x3", "directions")}
        _write(tmp_path / "spec.json", spec)
        result = runner.invoke(main, ["synth", str(tmp_path / "spec.json"),
                                      "--mode", "spherical",
                                      "--out-dir", str(tmp_path / "out")])
        assert result.exit_code == 4

    def test_invalid_spec_exit_2(self, runner, tmp_path):
        (tmp_path / "spec.json").write_text("{broken")
        result = runner.invoke(main, ["synth", str(tmp_path / "spec.json")])
        assert result.exit_code == 2


class TestFactor:
    def test_prints_factors(self, runner, tmp_path):
        _write(tmp_path / "spec.json", VIVIANI)
        result = runner.invoke(main, ["factor", str(tmp_path / "spec.json")])
        assert result.exit_code == 0
        assert "d = 4, c = 2" in result.output
        assert "h1:" in result.output and "h2:" in result.output


class TestCheck:
    def _synth(self, runner, tmp_path):
        _write(tmp_path / "spec.json", VIVIANI)
        result = runner.invoke(main, ["synth", str(tmp_path / "spec.json"),
                                      "--out-dir", str(tmp_path / "out")])
        assert result.exit_code == 0
        return tmp_path / "out" / "linkage.json", tmp_path / "spec.json"

    def test_pass(self, runner, tmp_path):
        linkage, spec = self._synth(runner, tmp_path)
        result = runner.invoke(main, ["check", str(linkage), str(spec)])
        assert result.exit_code == 0
        assert "trajectory: PASS" in result.output
        assert "loop closure: PASS" in result.output

    def test_tampered_exit_5(self, runner, tmp_path):
        linkage, spec = self._synth(runner, tmp_path)
        doc = json.loads(linkage.read_text())
        k1 = next(j for j in doc["joints"] if j["label"] == "k1")
        k2 = next(j for j in doc["joints"] if j["label"] == "k2")
        for key in ("quaternion", "pluecker"):
            k1[key], k2[key] = k2[key], k1[key]
        linkage.write_text(json.dumps(doc))
        result = runner.invoke(main, ["check", str(linkage), str(spec)])
        assert result.exit_code == 5

    def test_inconsistent_axis_exit_2(self, runner, tmp_path):
        linkage, spec = self._synth(runner, tmp_path)
        doc = json.loads(linkage.read_text())
        doc["joints"][0]["pluecker"][4] = "9"
        linkage.write_text(json.dumps(doc))
        result = runner.invoke(main, ["check", str(linkage), str(spec)])
        assert result.exit_code == 2


class TestBounds:
    def test_values(self, runner):
        result = runner.invoke(main, ["bounds", "4", "1"])
        assert result.exit_code == 0
        assert "links <= 10" in result.output and "joints <= 13" in result.output

    def test_invalid(self, runner):
        assert runner.invoke(main, ["bounds", "3", "0"]).exit_code == 2
