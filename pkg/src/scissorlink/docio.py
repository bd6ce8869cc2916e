"""Serialization of curve specifications, linkage documents and traces.

Rationals travel as strings ("p/q" or "p"), never as floats, in every
authoritative field; floats appear only in the extra CSV columns meant for
plotting.  Parsing reports the JSON position of the first offending value.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, List, Optional, Sequence, Tuple

from .algebra import (
    DualQuaternion,
    PlueckerLine,
    Quaternion,
    RotationQuaternion,
    Vec3,
    vec3,
)
from .errors import SpecParseError
from .linkage import (
    Generic,
    Joint,
    Link,
    Linkage,
    Planar,
    Spherical,
    count_bounds,
)
from .motion import FrameTransform, RationalCurve
from .realpoly import RealPoly

MODE_NAMES = ("generic", "planar", "spherical")


def fmt(x: Fraction) -> str:
    return str(x)


def _rational(value, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise SpecParseError(f"{where}: expected a rational string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise SpecParseError(f"{where}: {value!r} is not a rational") from exc
    raise SpecParseError(f"{where}: expected a rational string, got {value!r}")


def _rational_list(value, where: str, length: Optional[int] = None) -> List[Fraction]:
    if not isinstance(value, list):
        raise SpecParseError(f"{where}: expected a list")
    if length is not None and len(value) != length:
        raise SpecParseError(f"{where}: expected {length} entries, got {len(value)}")
    return [_rational(v, f"{where}[{i}]") for i, v in enumerate(value)]


@dataclass(frozen=True)
class CurveSpec:
    """Parsed input document: curve coordinates plus synthesis options."""

    coords: Tuple[RealPoly, RealPoly, RealPoly, RealPoly]
    mode: Optional[str]
    m0: Optional[DualQuaternion]
    directions: Optional[Tuple[Vec3, ...]]
    seed: int


def parse_curve_spec(data) -> CurveSpec:
    """Validate a decoded CurveSpec JSON object.

    Raises SpecParseError naming the offending key/index.
    """
    if not isinstance(data, dict):
        raise SpecParseError("top level: expected a JSON object")
    coords = []
    for key in ("x0", "x1", "x2", "x3"):
        if key not in data:
            raise SpecParseError(f"{key}: missing coefficient list")
        coords.append(RealPoly(_rational_list(data[key], key)))
    mode = data.get("mode")
    if mode is not None and mode not in MODE_NAMES:
        raise SpecParseError(f"mode: {mode!r} not one of {MODE_NAMES}")
    m0 = None
    if "m0" in data:
        cs = _rational_list(data["m0"], "m0", length=8)
        m0 = DualQuaternion(Quaternion.of(*cs[:4]), Quaternion.of(*cs[4:]))
    directions = None
    if "directions" in data:
        raw = data["directions"]
        if not isinstance(raw, list):
            raise SpecParseError("directions: expected a list of 3-vectors")
        directions = tuple(
            vec3(*_rational_list(v, f"directions[{i}]", length=3))
            for i, v in enumerate(raw))
    seed = data.get("seed", 0)
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise SpecParseError(f"seed: expected an integer, got {data.get('seed')!r}")
    return CurveSpec(tuple(coords), mode, m0, directions, seed)


def load_curve_spec(stream: IO[str]) -> CurveSpec:
    try:
        data = json.load(stream)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return parse_curve_spec(data)


def mode_from_name(name: Optional[str]):
    if name == "planar":
        return Planar()
    if name == "spherical":
        return Spherical()
    return Generic()


# --- LinkageDoc -------------------------------------------------------------

def _quat_fields(h: DualQuaternion) -> List[str]:
    return [fmt(c) for c in h.components()]

def _vec_fields(v: Sequence[Fraction]) -> List[str]:
    return [fmt(c) for c in v]


def linkage_to_doc(linkage: Linkage, curve: RationalCurve, mode: str) -> dict:
    """The JSON-ready document for a verified linkage."""
    d, c = curve.degree, curve.circularity
    bounds = count_bounds(d, c)
    return {
        "metadata": {
            "d": d,
            "c": c,
            "n": linkage.n,
            "mode": mode,
            "counts": {"links": linkage.link_count(),
                       "joints": linkage.joint_count()},
            "bounds": {"links": bounds[0], "joints": bounds[1]},
        },
        "joints": [
            {
                "label": j.label,
                "quaternion": _quat_fields(j.rotation.value),
                "pluecker": _vec_fields(j.axis_ref.components()),
                "links": list(j.links),
            }
            for j in linkage.joints
        ],
        "links": [{"label": l.label, "joints": list(l.joints)}
                  for l in linkage.links],
        "drawn_point": _vec_fields(linkage.drawn_point),
        "frame": {
            "translation": _vec_fields(linkage.frame.translation),
            "scale": fmt(linkage.frame.scale),
            "recenter": _vec_fields(linkage.recenter),
        },
    }


def linkage_from_doc(data) -> Linkage:
    """Rebuild a Linkage from a decoded LinkageDoc; exact round trip.

    Raises SpecParseError on malformed documents, including a serialized
    axis that disagrees with its joint quaternion.
    """
    if not isinstance(data, dict):
        raise SpecParseError("top level: expected a JSON object")
    try:
        meta = data["metadata"]
        n = meta["n"]
        joints_raw = data["joints"]
        links_raw = data["links"]
    except (KeyError, TypeError) as exc:
        raise SpecParseError(f"missing section: {exc}") from exc
    joints: List[Joint] = []
    for i, j in enumerate(joints_raw):
        where = f"joints[{i}]"
        try:
            label = j["label"]
            qs = _rational_list(j["quaternion"], f"{where}.quaternion", length=8)
            ps = _rational_list(j["pluecker"], f"{where}.pluecker", length=6)
            pair = tuple(j["links"])
        except (KeyError, TypeError) as exc:
            raise SpecParseError(f"{where}: {exc}") from exc
        rot = RotationQuaternion.wrap(
            DualQuaternion(Quaternion.of(*qs[:4]), Quaternion.of(*qs[4:])))
        ax = PlueckerLine.of(vec3(*ps[:3]), vec3(*ps[3:]))
        if ax != rot.axis():
            raise SpecParseError(f"{where}: axis does not match the quaternion")
        joints.append(Joint(label, rot, ax, pair))
    by_label = {j.label: j for j in joints}
    hs = tuple(by_label[f"h{i}"].rotation for i in range(1, n + 1))
    if n == 1 and "m0" not in by_label:
        ks: Tuple[RotationQuaternion, ...] = ()
        ms: Tuple[RotationQuaternion, ...] = ()
    else:
        ks = tuple(by_label[f"k{i}"].rotation for i in range(1, n + 1))
        ms = tuple(by_label[f"m{i}"].rotation for i in range(n + 1))
    links = tuple(Link(l["label"], tuple(l["joints"])) for l in links_raw)
    frame = FrameTransform(
        vec3(*_rational_list(data["frame"]["translation"], "frame.translation", 3)),
        _rational(data["frame"]["scale"], "frame.scale"))
    recenter = vec3(*_rational_list(data["frame"]["recenter"], "frame.recenter", 3))
    drawn = vec3(*_rational_list(data["drawn_point"], "drawn_point", 3))
    return Linkage(n, hs, ks, ms, links, tuple(joints), frame, recenter, drawn)


def dump_linkage_doc(doc: dict, stream: IO[str]) -> None:
    json.dump(doc, stream, indent=2)
    stream.write("\n")


def load_linkage_doc(stream: IO[str]) -> Linkage:
    try:
        data = json.load(stream)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return linkage_from_doc(data)


# --- trace CSV --------------------------------------------------------------

TRACE_HEADER = ("t", "drawn_x", "drawn_y", "drawn_z",
                "drawn_x_float", "drawn_y_float", "drawn_z_float")


def _sig12(x: Fraction) -> str:
    return f"{float(x):.12g}"


def write_trace(stream: IO[str], rows: Sequence[Tuple[object, Vec3]]) -> None:
    """Kinematic trace: t and the drawn point, exact strings plus 12
    significant digit floats.  A t of infinity is written as literal "inf".
    """
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(TRACE_HEADER)
    for t, p in rows:
        tcol = "inf" if not isinstance(t, (int, Fraction)) else fmt(Fraction(t))
        writer.writerow([tcol, fmt(p[0]), fmt(p[1]), fmt(p[2]),
                         _sig12(p[0]), _sig12(p[1]), _sig12(p[2])])


def read_trace(stream: IO[str]) -> List[Tuple[object, Vec3]]:
    reader = csv.reader(stream)
    header = next(reader, None)
    if tuple(header or ()) != TRACE_HEADER:
        raise SpecParseError(f"trace header {header!r} != {list(TRACE_HEADER)}")
    rows: List[Tuple[object, Vec3]] = []
    for row in reader:
        t = row[0] if row[0] == "inf" else Fraction(row[0])
        rows.append((t, vec3(Fraction(row[1]), Fraction(row[2]), Fraction(row[3]))))
    return rows
