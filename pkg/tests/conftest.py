"""Shared fixture curves and helpers for the test suite.

Fixture parameters follow the worked examples: ellipse/segment/circle as
trigonometric curves in rational parameterization, Viviani's curve, and
the limacon family (cardioid at a = b = 1).
"""

import random
from fractions import Fraction

import pytest

from scissorlink.algebra import (
    DualQuaternion,
    Quaternion,
    RotationQuaternion,
    vec3,
    vdot,
    vscale,
    vsub,
)
from scissorlink.motion import RationalCurve, curve_load
from scissorlink.realpoly import RealPoly


def P(*coeffs) -> RealPoly:
    return RealPoly([Fraction(c) for c in coeffs])


def ellipse_curve(a=2, b=1) -> RationalCurve:
    """(2a(1-t^2), 4bt, 0) / (1+t^2) shifted: x = 1 - 2a i under the
    elliptic translation; here the direct parametric form."""
    return curve_load(P(1, 0, 1), P(-2 * a), P(0, -2 * b), P(0))


def circle_curve() -> RationalCurve:
    return ellipse_curve(1, 1)


def segment_curve(a=2) -> RationalCurve:
    return curve_load(P(1, 0, 1), P(-a), P(0), P(0))


def viviani_curve() -> RationalCurve:
    return curve_load(P(1, 0, 2, 0, 1), P(0, 0, -4), P(0, 2, 0, -2), P(0, 2, 0, 2))


def limacon_curve(a=2, b=1) -> RationalCurve:
    return curve_load(P(1, 0, 2, 0, 1),
                      P(0, 2 * (a - b), 0, -2 * (a + b)),
                      P(2 * b, 0, 4 * a + 2 * b),
                      P(0))


def cardioid_curve() -> RationalCurve:
    return limacon_curve(1, 1)


FIXTURE_CURVES = {
    "ellipse": ellipse_curve,
    "circle": circle_curve,
    "segment": segment_curve,
    "viviani": viviani_curve,
    "limacon": limacon_curve,
    "cardioid": cardioid_curve,
}


def dq(p0=0, p1=0, p2=0, p3=0, q0=0, q1=0, q2=0, q3=0) -> DualQuaternion:
    return DualQuaternion(Quaternion.of(p0, p1, p2, p3),
                          Quaternion.of(q0, q1, q2, q3))


def rot(p0=0, p1=0, p2=0, p3=0, q1=0, q2=0, q3=0) -> RotationQuaternion:
    return RotationQuaternion(dq(p0, p1, p2, p3, 0, q1, q2, q3))


def random_rotation(rng: random.Random) -> RotationQuaternion:
    """Rotation quaternion with small random rational components: nonzero
    primal vector, dual with zero scalar and perpendicular vector part."""
    while True:
        v = vec3(*(Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                   for _ in range(3)))
        if v != (0, 0, 0):
            break
    w = vec3(*(Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(3)))
    w = vsub(w, vscale(vdot(w, v) / vdot(v, v), v))
    s = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return RotationQuaternion(DualQuaternion(
        Quaternion.of(s, *v), Quaternion.of(0, *w)))


def random_quaternion(rng: random.Random) -> Quaternion:
    return Quaternion.of(*(Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                           for _ in range(4)))


def random_dual_quaternion(rng: random.Random) -> DualQuaternion:
    return DualQuaternion(random_quaternion(rng), random_quaternion(rng))
