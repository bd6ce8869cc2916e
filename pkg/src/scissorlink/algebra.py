"""Exact quaternion and dual quaternion algebra over the rationals.

All coefficients are `fractions.Fraction`, so every operation here is exact:
products, inverses and the rigid-body action on points never round.  Values
are immutable; each operation returns a fresh object.

Dual numbers are not a public type.  They only occur as the norm of a dual
quaternion and are represented there by a dual quaternion whose primal and
dual parts are both scalars.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from .errors import DegenerateActor, NotInvertible, NotRotation
from .realpoly import RealPoly

Scalar = Union[int, Fraction]
Vec3 = Tuple[Fraction, Fraction, Fraction]


def frac(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vec3(x: Scalar, y: Scalar, z: Scalar) -> Vec3:
    return (frac(x), frac(y), frac(z))


def vdot(a: Vec3, b: Vec3) -> Fraction:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def vcross(a: Vec3, b: Vec3) -> Vec3:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def vadd(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def vsub(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def vscale(c: Scalar, a: Vec3) -> Vec3:
    c = frac(c)
    return (c * a[0], c * a[1], c * a[2])


def vzero(a: Vec3) -> bool:
    return a[0] == 0 and a[1] == 0 and a[2] == 0


@dataclass(frozen=True)
class Quaternion:
    """Quaternion w + x*i + y*j + z*k with exact rational components."""

    w: Fraction
    x: Fraction
    y: Fraction
    z: Fraction

    @staticmethod
    def of(w: Scalar = 0, x: Scalar = 0, y: Scalar = 0, z: Scalar = 0) -> "Quaternion":
        return Quaternion(frac(w), frac(x), frac(y), frac(z))

    @staticmethod
    def from_vector(v: Vec3) -> "Quaternion":
        return Quaternion(Fraction(0), frac(v[0]), frac(v[1]), frac(v[2]))

    def __add__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            a, b = self, other
            return Quaternion(
                a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
            )
        if isinstance(other, (int, Fraction)):
            c = frac(other)
            return Quaternion(c * self.w, c * self.x, c * self.y, c * self.z)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> Fraction:
        """Squared length: q * conj(q), a non-negative rational."""
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def inverse(self) -> "Quaternion":
        n = self.norm()
        if n == 0:
            raise NotInvertible("zero quaternion has no inverse")
        return self.conjugate() * (Fraction(1) / n)

    def is_zero(self) -> bool:
        return self.w == 0 and self.x == 0 and self.y == 0 and self.z == 0

    def is_real(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0

    def vector(self) -> Vec3:
        return (self.x, self.y, self.z)

    def components(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.w, self.x, self.y, self.z)

    def __repr__(self) -> str:
        return f"Quaternion({self.w}, {self.x}, {self.y}, {self.z})"


Q_ZERO = Quaternion.of(0)
Q_ONE = Quaternion.of(1)
Q_I = Quaternion.of(0, 1)
Q_J = Quaternion.of(0, 0, 1)
Q_K = Quaternion.of(0, 0, 0, 1)


@dataclass(frozen=True)
class DualQuaternion:
    """Dual quaternion primal + eps * dual with eps^2 = 0."""

    primal: Quaternion
    dual: Quaternion

    @staticmethod
    def of(primal: Quaternion, dual: Quaternion = Q_ZERO) -> "DualQuaternion":
        return DualQuaternion(primal, dual)

    @staticmethod
    def from_scalar(c: Scalar) -> "DualQuaternion":
        return DualQuaternion(Quaternion.of(c), Q_ZERO)

    @staticmethod
    def translator(v: Vec3) -> "DualQuaternion":
        """Displacement translating every point by v."""
        return DualQuaternion(Q_ONE, Quaternion.from_vector(vscale(Fraction(-1, 2), v)))

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return DualQuaternion(self.primal + other.primal, self.dual + other.dual)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return DualQuaternion(self.primal - other.primal, self.dual - other.dual)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> "DualQuaternion":
        return DualQuaternion(-self.primal, -self.dual)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return DualQuaternion(
            self.primal * other.primal,
            self.primal * other.dual + self.dual * other.primal,
        )

    def __rmul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def conjugate(self) -> "DualQuaternion":
        return DualQuaternion(self.primal.conjugate(), self.dual.conjugate())

    def norm(self) -> "DualQuaternion":
        """h * conj(h): a dual number stored as a dual quaternion."""
        return self * self.conjugate()

    def norm_parts(self) -> Tuple[Fraction, Fraction]:
        """The dual number h*conj(h) as a pair (real part, eps part)."""
        n = self.norm()
        return (n.primal.w, n.dual.w)

    def inverse(self) -> "DualQuaternion":
        if self.primal.is_zero():
            raise NotInvertible("dual quaternion with zero primal part")
        a, b = self.norm_parts()
        # (a + eps b)^-1 = a^-1 - eps b a^-2
        inv_a = Fraction(1) / a
        ninv = DualQuaternion(Quaternion.of(inv_a), Quaternion.of(-b * inv_a * inv_a))
        return ninv * self.conjugate()

    def is_zero(self) -> bool:
        return self.primal.is_zero() and self.dual.is_zero()

    def is_quaternion(self) -> bool:
        return self.dual.is_zero()

    def is_real_scalar(self) -> bool:
        return self.primal.is_real() and self.dual.is_zero()

    def scalar_part(self) -> Fraction:
        return self.primal.w

    def components(self):
        """Eight components [p0, p1, p2, p3, q0, q1, q2, q3]."""
        return self.primal.components() + self.dual.components()

    def __repr__(self) -> str:
        return f"DualQuaternion({self.primal!r}, {self.dual!r})"


def _coerce(x) -> "DualQuaternion | None":
    if isinstance(x, DualQuaternion):
        return x
    if isinstance(x, Quaternion):
        return DualQuaternion(x, Q_ZERO)
    if isinstance(x, (int, Fraction)):
        return DualQuaternion.from_scalar(x)
    return None


DQ_ZERO = DualQuaternion(Q_ZERO, Q_ZERO)
DQ_ONE = DualQuaternion(Q_ONE, Q_ZERO)


def act_on_point(h: DualQuaternion, z: Vec3) -> Vec3:
    """Image of the point z under the rigid displacement encoded by h.

    h must have real nonzero norm; the map is then an isometry given by
    (p z conj(p) + p conj(q) - q conj(p)) / (p conj(p)).
    """
    a, b = h.norm_parts()
    if a == 0:
        raise DegenerateActor("primal norm is zero")
    if b != 0:
        raise DegenerateActor("norm has a nonzero eps part")
    p, q = h.primal, h.dual
    zq = Quaternion.from_vector(z)
    img = p * zq * p.conjugate() + p * q.conjugate() - q * p.conjugate()
    s = Fraction(1) / p.norm()
    # scalar part cancels exactly for valid actors
    assert img.w == 0
    return vscale(s, img.vector())


def is_rotation_quaternion(h: DualQuaternion) -> bool:
    """Rotation about a fixed axis: h + conj(h) and h*conj(h) real, and the
    primal vector part nonzero (which excludes translations)."""
    if h.dual.w != 0:
        return False
    if vdot(h.primal.vector(), h.dual.vector()) != 0:
        return False
    return not vzero(h.primal.vector())


@dataclass(frozen=True)
class RotationQuaternion:
    """Dual quaternion validated to parameterize a rotation t - h."""

    value: DualQuaternion

    def __post_init__(self):
        if not is_rotation_quaternion(self.value):
            raise NotRotation(f"not a rotation quaternion: {self.value!r}")

    @staticmethod
    def wrap(h) -> "RotationQuaternion":
        coerced = _coerce(h)
        if coerced is None:
            raise NotRotation(f"cannot interpret {h!r} as a dual quaternion")
        return RotationQuaternion(coerced)

    def minpol(self) -> RealPoly:
        """Monic real quadratic (t - h)(t - conj(h))."""
        return minpol(self.value)

    def axis(self) -> "PlueckerLine":
        return axis(self)

    def conjugate(self) -> "RotationQuaternion":
        return RotationQuaternion(self.value.conjugate())


def minpol(h: DualQuaternion) -> RealPoly:
    """Monic real quadratic t^2 - (h + conj(h)) t + h conj(h).

    Requires h + conj(h) and h*conj(h) to be real (eps-free scalars).
    """
    tr = h + h.conjugate()
    if not tr.is_real_scalar():
        raise NotRotation("h + conj(h) is not a real scalar")
    a, b = h.norm_parts()
    if b != 0:
        raise NotRotation("h*conj(h) has a nonzero eps part")
    return RealPoly([a, -tr.scalar_part(), Fraction(1)])


@dataclass(frozen=True)
class PlueckerLine:
    """Line in space by Pluecker coordinates (direction, moment).

    Stored in canonical form: the first nonzero direction component is
    scaled to 1, so equal lines compare equal.
    """

    direction: Vec3
    moment: Vec3

    @staticmethod
    def of(direction: Vec3, moment: Vec3) -> "PlueckerLine":
        if vzero(direction):
            raise NotRotation("Pluecker direction must be nonzero")
        if vdot(direction, moment) != 0:
            raise NotRotation("Pluecker condition d . m = 0 violated")
        pivot = next(c for c in direction if c != 0)
        s = Fraction(1) / pivot
        return PlueckerLine(vscale(s, direction), vscale(s, moment))

    def is_parallel_to(self, other: "PlueckerLine") -> bool:
        return vzero(vcross(self.direction, other.direction))

    def reciprocal(self, other: "PlueckerLine") -> Fraction:
        """d1.m2 + d2.m1; zero iff the lines are coplanar."""
        return vdot(self.direction, other.moment) + vdot(other.direction, self.moment)

    def intersects(self, other: "PlueckerLine") -> bool:
        """True iff the lines meet in a single proper point."""
        if self.is_parallel_to(other):
            return False
        return self.reciprocal(other) == 0

    def point_on_line(self) -> Vec3:
        """Foot of the perpendicular from the origin."""
        s = Fraction(1) / vdot(self.direction, self.direction)
        return vscale(s, vcross(self.direction, self.moment))

    def contains_point(self, p: Vec3) -> bool:
        return vcross(p, self.direction) == self.moment

    def intersection_point(self, other: "PlueckerLine") -> "Vec3 | None":
        if not self.intersects(other):
            return None
        p0 = self.point_on_line()
        d1, d2 = self.direction, other.direction
        # Solve (p0 + s d1) x d2 = m2 componentwise on a nonzero coordinate.
        rhs = vsub(other.moment, vcross(p0, d2))
        lhs = vcross(d1, d2)
        for i in range(3):
            if lhs[i] != 0:
                s = rhs[i] / lhs[i]
                return vadd(p0, vscale(s, d1))
        raise AssertionError("non-parallel lines with zero direction cross product")

    def components(self):
        return self.direction + self.moment


def axis(h: "RotationQuaternion | DualQuaternion") -> PlueckerLine:
    """Pluecker axis of the rotation t - h.

    Reads h - conj(h) = l1 i + l2 j + l3 k - eps (l4 i + l5 j + l6 k) and
    returns [l1, l2, l3, l4, l5, l6] in canonical scale.
    """
    if isinstance(h, RotationQuaternion):
        h = h.value
    elif not is_rotation_quaternion(h):
        raise NotRotation("vector part of primal is zero or Study fails")
    diff = h - h.conjugate()
    direction = diff.primal.vector()
    moment = vscale(-1, diff.dual.vector())
    return PlueckerLine.of(direction, moment)


def conjugate_by(g: DualQuaternion, h: DualQuaternion) -> DualQuaternion:
    """g h g^-1: the rotation h expressed after the change of frame g."""
    return g * h * g.inverse()
