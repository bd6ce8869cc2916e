"""Dense polynomials over quaternions and dual quaternions.

The indeterminate t is central: it commutes with every coefficient, while
the coefficients themselves do not commute with each other.  A single class
covers both H[t] and DH[t]; a quaternion polynomial is one whose
coefficients all have zero dual part.

Evaluation at a (dual) quaternion h substitutes powers on the right,
C(h) = sum c_i h^i.  This is *not* a ring homomorphism: (FG)(h) generally
differs from F(h)G(h) unless h is a central (real) value.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, List, Tuple

from .algebra import (
    DQ_ONE,
    DQ_ZERO,
    DualQuaternion,
    Quaternion,
    Vec3,
    frac,
    vdot,
)
from .errors import (
    NoRationalZeroInDirection,
    NotMonic,
    ZeroPolynomial,
)
from .realpoly import RealPoly, check_irreducible_quadratic, real_gcd


def _coerce_coeff(c) -> DualQuaternion:
    if isinstance(c, DualQuaternion):
        return c
    if isinstance(c, Quaternion):
        return DualQuaternion(c, Quaternion.of(0))
    if isinstance(c, (int, Fraction)):
        return DualQuaternion.from_scalar(c)
    raise TypeError(f"cannot use {c!r} as a polynomial coefficient")


class QPoly:
    """Polynomial with dual quaternion coefficients, ascending powers of t."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [_coerce_coeff(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: Tuple[DualQuaternion, ...] = tuple(cs)

    # -- construction -------------------------------------------------------

    @staticmethod
    def zero() -> "QPoly":
        return QPoly([])

    @staticmethod
    def one() -> "QPoly":
        return QPoly([1])

    @staticmethod
    def constant(c) -> "QPoly":
        return QPoly([c])

    @staticmethod
    def linear(h) -> "QPoly":
        """The linear polynomial t - h."""
        return QPoly([-_coerce_coeff(h), DQ_ONE])

    @staticmethod
    def from_real(f: RealPoly) -> "QPoly":
        return QPoly(list(f.coeffs))

    @staticmethod
    def from_parts(primal: "QPoly", dual: "QPoly") -> "QPoly":
        """Assemble primal + eps * dual from two quaternion polynomials."""
        n = max(len(primal.coeffs), len(dual.coeffs))
        out = []
        for i in range(n):
            p = primal.coeff(i)
            q = dual.coeff(i)
            assert p.is_quaternion() and q.is_quaternion()
            out.append(DualQuaternion(p.primal, q.primal))
        return QPoly(out)

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, power: int) -> DualQuaternion:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return DQ_ZERO

    def lcoeff(self) -> DualQuaternion:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == DQ_ONE

    def is_quaternion_poly(self) -> bool:
        return all(c.is_quaternion() for c in self.coeffs)

    def is_real_poly(self) -> bool:
        return all(c.is_real_scalar() for c in self.coeffs)

    def to_real(self) -> RealPoly:
        if not self.is_real_poly():
            raise ValueError(f"{self!r} is not a real polynomial")
        return RealPoly([c.scalar_part() for c in self.coeffs])

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Quaternion, DualQuaternion)):
            other = QPoly([other])
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "QPoly | None":
        if isinstance(x, QPoly):
            return x
        if isinstance(x, RealPoly):
            return QPoly.from_real(x)
        if isinstance(x, (int, Fraction, Quaternion, DualQuaternion)):
            return QPoly([x])
        return None

    def __add__(self, other) -> "QPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other) -> "QPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __rsub__(self, other) -> "QPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self.coeffs])

    def __mul__(self, other) -> "QPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QPoly.zero()
        out = [DQ_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return QPoly(out)

    def __rmul__(self, other) -> "QPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def conjugate(self) -> "QPoly":
        return QPoly([c.conjugate() for c in self.coeffs])

    def primal_part(self) -> "QPoly":
        return QPoly([DualQuaternion(c.primal, Quaternion.of(0)) for c in self.coeffs])

    def dual_part(self) -> "QPoly":
        return QPoly([DualQuaternion(c.dual, Quaternion.of(0)) for c in self.coeffs])

    def evaluate(self, h) -> DualQuaternion:
        """Right evaluation sum c_i h^i (powers of h multiply on the right)."""
        h = _coerce_coeff(h)
        acc = DQ_ZERO
        power = DQ_ONE
        for c in self.coeffs:
            acc = acc + c * power
            power = power * h
        return acc

    def component_polys(self) -> List[RealPoly]:
        """The eight real component polynomials (4 primal, 4 dual)."""
        return [RealPoly([c.components()[k] for c in self.coeffs]) for k in range(8)]

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r})"


def rqr(f: QPoly, g: QPoly) -> Tuple[QPoly, QPoly]:
    """Right division: Q, R with f = g*Q + R and deg R < deg g; g monic."""
    if not g.is_monic():
        raise NotMonic("right division needs a monic divisor")
    q = QPoly.zero()
    r = f
    n = g.degree()
    while not r.is_zero() and r.degree() >= n:
        c = r.lcoeff()
        m = r.degree()
        term = QPoly([DQ_ZERO] * (m - n) + [c])
        q = q + term
        r = r - g * term
    return q, r


def lqr(f: QPoly, g: QPoly) -> Tuple[QPoly, QPoly]:
    """Left division: Q, R with f = Q*g + R and deg R < deg g; g monic."""
    if not g.is_monic():
        raise NotMonic("left division needs a monic divisor")
    q = QPoly.zero()
    r = f
    n = g.degree()
    while not r.is_zero() and r.degree() >= n:
        c = r.lcoeff()
        m = r.degree()
        term = QPoly([DQ_ZERO] * (m - n) + [c])
        q = q + term
        r = r - term * g
    return q, r


def rquo(f: QPoly, g: QPoly) -> QPoly:
    return rqr(f, g)[0]


def rrem(f: QPoly, g: QPoly) -> QPoly:
    return rqr(f, g)[1]


def lquo(f: QPoly, g: QPoly) -> QPoly:
    return lqr(f, g)[0]


def lrem(f: QPoly, g: QPoly) -> QPoly:
    return lqr(f, g)[1]


def lgcd(f: QPoly, g: QPoly) -> QPoly:
    """Monic left gcd: the L of maximal degree with f = L*Q and g = L*R.

    Euclidean recursion on right remainders; g must be monic.
    """
    if not g.is_monic():
        raise NotMonic("left gcd needs a monic second argument")
    r = rrem(f, g)
    if r.is_zero():
        return g
    return lgcd(g, r * r.lcoeff().inverse())


def mrpf(p: QPoly) -> RealPoly:
    """Maximal monic real polynomial factor of p.

    A real polynomial divides p exactly when it divides every real component
    polynomial, so this is the monic gcd of the nonzero components.
    """
    if p.is_zero():
        raise ZeroPolynomial("mrpf of the zero polynomial")
    acc = RealPoly.zero()
    for comp in p.component_polys():
        if not comp.is_zero():
            acc = real_gcd(acc, comp)
    return acc


def divide_by_real(f: QPoly, g: RealPoly) -> QPoly:
    """Exact division of f by a central real polynomial g."""
    gq = QPoly.from_real(g.monic())
    q, r = rqr(f, gq)
    if not r.is_zero():
        raise ZeroPolynomial(f"{g!r} does not divide exactly")
    return q * (Fraction(1) / g.lcoeff())


def _rational_sqrt(x: Fraction) -> "Fraction | None":
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def quad_zero(f: RealPoly, v: Vec3) -> Quaternion:
    """The unique quaternion zero of the irreducible quadratic f in the
    direction of v: (-b + lambda (v1 i + v2 j + v3 k)) / 2 with lambda > 0.

    lambda^2 = (4c - b^2) / (v.v) must be a rational square in exact mode.
    """
    b, c = check_irreducible_quadratic(f)
    v = (frac(v[0]), frac(v[1]), frac(v[2]))
    vv = vdot(v, v)
    if vv == 0:
        raise ValueError("direction must be nonzero")
    lam = _rational_sqrt((4 * c - b * b) / vv)
    if lam is None:
        raise NoRationalZeroInDirection(
            f"(4c - b^2)/|v|^2 = {(4 * c - b * b) / vv} is not a rational square")
    half = Fraction(1, 2)
    return Quaternion.of(-b * half, lam * v[0] * half, lam * v[1] * half, lam * v[2] * half)
