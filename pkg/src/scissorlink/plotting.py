"""Figure rendering for synthesis reports.

Floats enter only here: every coordinate is converted from exact rationals
at the last moment, purely for display.  Rendering is deterministic for a
fixed input (headless Agg backend, no timestamps in the figures).
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .algebra import Vec3, vadd, vscale, vsub  # noqa: E402
from .linkage import Linkage  # noqa: E402
from .motion import RationalCurve  # noqa: E402
from .verify import INFINITY, configuration_at  # noqa: E402


def _floats(p: Vec3) -> Tuple[float, float, float]:
    return (float(p[0]), float(p[1]), float(p[2]))


def curve_points(curve: RationalCurve, count: int = 400) -> List[Tuple[float, float, float]]:
    """Dense sweep of the curve over t = tan-like rational grid.

    The substitution t = u/(1-u^2) maps (-1, 1) onto all of R, so a uniform
    grid in u covers the whole parameter line; the two endpoints contribute
    the point at infinity.
    """
    pts = [_floats(curve.point_at_infinity())]
    for i in range(1, count):
        u = Fraction(2 * i, count) - 1
        t = u / (1 - u * u)
        pts.append(_floats(curve.evaluate(t)))
    pts.append(_floats(curve.point_at_infinity()))
    return pts


def render_curve_figure(path: str, curve: RationalCurve,
                        samples: Sequence[Tuple[object, Vec3]]) -> None:
    """The input curve with the verified drawn points overlaid."""
    pts = curve_points(curve)
    fig = plt.figure(figsize=(6, 6))
    ax = fig.add_subplot(projection="3d")
    ax.plot([p[0] for p in pts], [p[1] for p in pts], [p[2] for p in pts],
            color="tab:blue", linewidth=1.0, label="curve")
    drawn = [_floats(p) for _, p in samples]
    if drawn:
        ax.scatter([p[0] for p in drawn], [p[1] for p in drawn],
                   [p[2] for p in drawn], color="tab:red", s=18,
                   label="drawn samples")
    ax.set_title("curve and replayed trace")
    ax.legend(loc="upper left")
    fig.savefig(path)
    plt.close(fig)


def _axis_segment(line, half_length: float = 1.5):
    p = line.point_on_line()
    d = line.direction
    s = Fraction(1, 1)
    a = _floats(vsub(p, vscale(s, d)))
    b = _floats(vadd(p, vscale(s, d)))
    return a, b


def render_linkage_figure(path: str, linkage: Linkage, t=INFINITY) -> None:
    """Joint axes (and the drawn point) at one configuration."""
    sample = configuration_at(linkage, t)
    fig = plt.figure(figsize=(6, 6))
    ax = fig.add_subplot(projection="3d")
    colors = {"h": "tab:blue", "k": "tab:orange", "m": "tab:green"}
    seen = set()
    for label, line in sample.joint_poses:
        a, b = _axis_segment(line)
        kind = label[0]
        kw = {}
        if kind not in seen:
            kw["label"] = f"{kind} joints"
            seen.add(kind)
        ax.plot([a[0], b[0]], [a[1], b[1]], [a[2], b[2]],
                color=colors[kind], linewidth=1.2, **kw)
    p = _floats(sample.drawn)
    ax.scatter([p[0]], [p[1]], [p[2]], color="tab:red", s=24, label="drawn point")
    title = "reference configuration" if t is INFINITY else f"configuration at t = {t}"
    ax.set_title(title)
    ax.legend(loc="upper left")
    fig.savefig(path)
    plt.close(fig)
