"""Independent verification of synthesized linkages.

Replays the linkage kinematically at exact rational parameters, compares
the drawn point against the input curve, and re-checks every four-bar
cell's loop-closure identity.  All comparisons are exact; nothing here
rounds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .algebra import (
    DQ_ONE,
    DualQuaternion,
    PlueckerLine,
    Quaternion,
    RotationQuaternion,
    Vec3,
    act_on_point,
    axis,
    conjugate_by,
    frac,
    vadd,
)
from .errors import ClosureViolation, Mismatch
from .linkage import Linkage
from .motion import (
    Factorization,
    MotionPolynomial,
    RationalCurve,
    curve_load,
    trajectory_poly,
)
from .quatpoly import QPoly


class _Infinity:
    """Parameter value t = infinity: the reference configuration."""

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _Infinity()

Parameter = Union[int, Fraction, _Infinity]

DEFAULT_SAMPLES: Tuple[Fraction, ...] = tuple(
    Fraction(*p) for p in ((0, 1), (1, 1), (-1, 1), (2, 1), (-2, 1),
                           (1, 2), (-1, 2), (3, 1), (-3, 1), (5, 7)))


@dataclass(frozen=True)
class KinematicSample:
    t: Parameter
    joint_poses: Tuple[Tuple[str, PlueckerLine], ...]
    drawn: Vec3

    def pose_of(self, label: str) -> PlueckerLine:
        for lab, line in self.joint_poses:
            if lab == label:
                return line
        raise KeyError(label)


@dataclass(frozen=True)
class TrajectoryReport:
    samples: Tuple[Fraction, ...]
    symbolic_ok: bool
    ok: bool


@dataclass(frozen=True)
class ClosureReport:
    cells: int
    spot_checks: Tuple[Fraction, ...]
    ok: bool


def point_trajectory(c, z: Vec3) -> RationalCurve:
    """Orbit of the point z under the motion c, as a reduced curve.

    Homogeneous coordinates [P conj(P), vec(P z conj(P) + 2 P conj(Q))].
    """
    value = c.value if isinstance(c, MotionPolynomial) else c
    p = value.primal_part()
    q = value.dual_part()
    zq = QPoly.constant(Quaternion.from_vector((frac(z[0]), frac(z[1]), frac(z[2]))))
    orbit = p * zq * p.conjugate() + 2 * (p * q.conjugate())
    x0 = (p * p.conjugate()).to_real()
    comps = orbit.component_polys()
    # the orbit has no scalar part; the homogeneous weight is P conj(P)
    assert comps[0].is_zero()
    return curve_load(x0, comps[1], comps[2], comps[3])


def _bottom_poses(linkage: Linkage, t: Fraction) -> List[DualQuaternion]:
    """Partial products G_0 = 1, G_i = G_(i-1) * (t - h_i)."""
    poses = [DQ_ONE]
    for h in linkage.h:
        poses.append(poses[-1] * (DualQuaternion.from_scalar(t) - h.value))
    return poses


def _top_poses(linkage: Linkage, t: Fraction,
               bottom: Sequence[DualQuaternion]) -> List[DualQuaternion]:
    """Pose of the top link t_i: T_i = G_i * (s_i - m_i) where the cell
    parameter s_i = trace(h_i) - t reverses the rotation of joint h_i.
    T_0 uses cell 1's parameter."""
    tops: List[DualQuaternion] = []
    for i in range(linkage.n + 1):
        h = linkage.h[max(i, 1) - 1].value
        trace = (h + h.conjugate()).scalar_part()
        s = DualQuaternion.from_scalar(trace - t)
        tops.append(bottom[i] * (s - linkage.m[i].value))
    return tops


def configuration_at(linkage: Linkage, t: Parameter) -> KinematicSample:
    """Poses of all joint axes and the drawn point at parameter t.

    At t = infinity all joints are at reference pose and the chain acts as
    the identity.
    """
    if isinstance(t, _Infinity):
        poses = tuple((j.label, j.axis_ref) for j in linkage.joints)
        return KinematicSample(t, poses, linkage.drawn_point)
    t = frac(t)
    bottom = _bottom_poses(linkage, t)
    poses: List[Tuple[str, PlueckerLine]] = []
    for i, h in enumerate(linkage.h, start=1):
        poses.append((f"h{i}", axis(conjugate_by(bottom[i - 1], h.value))))
    if linkage.k:
        top = _top_poses(linkage, t, bottom)
        for i, kq in enumerate(linkage.k, start=1):
            pose = axis(conjugate_by(top[i - 1], kq.value))
            other = axis(conjugate_by(top[i], kq.value))
            if pose != other:
                # the shared joint axis must look the same from both top links
                raise Mismatch(f"joint k{i} axis disagrees between its two links at t = {t}",
                               t=t, drawn=pose, expected=other)
            poses.append((f"k{i}", pose))
        for i, mq in enumerate(linkage.m):
            poses.append((f"m{i}", axis(conjugate_by(top[i], mq.value))))
    drawn_chain = act_on_point(bottom[-1], linkage.tracer())
    return KinematicSample(t, tuple(poses), linkage.to_original(drawn_chain))


def check_trajectory(linkage: Linkage, curve: RationalCurve,
                     samples: Optional[Sequence] = None) -> TrajectoryReport:
    """Exact pointwise and symbolic comparison of drawn path and curve.

    Raises Mismatch on the first disagreeing sample, or on failure of the
    symbolic identity that the tracer's orbit under the full chain product
    equals the curve (in chain coordinates).
    """
    ts = tuple(frac(t) for t in (DEFAULT_SAMPLES if samples is None else samples))
    for t in ts:
        expected = curve.evaluate(t)
        drawn = configuration_at(linkage, t).drawn
        if drawn != expected:
            raise Mismatch(f"drawn point differs at t = {t}",
                           t=t, drawn=drawn, expected=expected)
    shift = vadd(linkage.frame.translation, linkage.recenter)
    chain_curve = curve.translated(shift)
    orbit = point_trajectory(MotionPolynomial(linkage.chain_product()),
                             linkage.tracer())
    if orbit != chain_curve:
        raise Mismatch("chain trajectory differs from the curve symbolically",
                       t=None, drawn=orbit, expected=chain_curve)
    return TrajectoryReport(ts, True, True)


def check_loop_closure(linkage: Linkage, seed: int = 0) -> ClosureReport:
    """Exact per-cell identity (t-h_i)(t-m_(i-1)) = (t-m_i)(t-k_i), plus a
    secondary evaluation cross-check at 5 random rational parameters."""
    rng = random.Random(seed)
    spots = tuple(Fraction(rng.randint(-50, 50), rng.randint(1, 20))
                  for _ in range(5))
    for i in range(1, linkage.n + 1):
        if not linkage.k:
            break
        lhs, rhs = linkage.cell_identity(i)
        if lhs != rhs:
            raise ClosureViolation(f"cell {i}: polynomial identity fails", cell=i)
        for t in spots:
            if lhs.evaluate(t) != rhs.evaluate(t):
                raise ClosureViolation(f"cell {i}: mismatch at t = {t}", cell=i)
    return ClosureReport(linkage.n if linkage.k else 0, spots, True)


def trajectory_identity(fz: Factorization, c: MotionPolynomial) -> bool:
    """The factor product equals CH and its origin-orbit polynomial equals
    H conj(H) times the orbit polynomial of C."""
    product = fz.product()
    if product != c.value * fz.cofactor:
        return False
    hh = fz.cofactor * fz.cofactor.conjugate()
    lhs = trajectory_poly(MotionPolynomial(product))
    rhs = hh * trajectory_poly(c)
    return lhs == rhs
