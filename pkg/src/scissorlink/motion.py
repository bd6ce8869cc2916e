"""Motion polynomials and their factorization.

Covers curve preprocessing (reduction, degree, circularity, boundedness,
normalization), the minimal-degree motion with a prescribed trajectory, and
the two factorization routines: the generic one, and the tame one that
right-multiplies by a quaternion cofactor H so the product admits a
factorization while the drawn trajectory is unchanged.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from .algebra import (
    DualQuaternion,
    Quaternion,
    RotationQuaternion,
    Vec3,
    frac,
    vec3,
    vscale,
)
from .errors import (
    HasRealRoot,
    NoRationalZeroInDirection,
    NonInvertibleRemainderLead,
    NotGeneric,
    NotMotionPolynomial,
    NotMonic,
    NotRepresentable,
    NotRotation,
    NotTame,
    SearchExhausted,
    Unbounded,
    ZeroPickExhausted,
)
from .realpoly import (
    RealPoly,
    check_irreducible_quadratic,
    count_real_roots,
    quad_factors,
    real_gcd,
    real_quo,
)
from .quatpoly import (
    QPoly,
    divide_by_real,
    lgcd,
    lquo,
    mrpf,
    quad_zero,
    rqr,
    rquo,
    rrem,
)
from .threesquares import three_square_decomposition


@dataclass(frozen=True)
class FrameTransform:
    """Translation (and homogeneous rescaling) used to normalize a curve.

    The normalized curve is X_n(t) = X(t) + translation; the scale records
    the leading coefficient divided out of the homogeneous coordinates and
    has no effect on points in space.
    """

    translation: Vec3
    scale: Fraction

    @staticmethod
    def identity() -> "FrameTransform":
        return FrameTransform(vec3(0, 0, 0), Fraction(1))

    def apply_point(self, p: Vec3) -> Vec3:
        """Original coordinates -> normalized coordinates."""
        return (p[0] + self.translation[0],
                p[1] + self.translation[1],
                p[2] + self.translation[2])

    def unapply_point(self, p: Vec3) -> Vec3:
        """Normalized coordinates -> original coordinates."""
        return (p[0] - self.translation[0],
                p[1] - self.translation[1],
                p[2] - self.translation[2])


class RationalCurve:
    """Bounded rational space curve X = (x1/x0, x2/x0, x3/x0), reduced."""

    __slots__ = ("x0", "x1", "x2", "x3", "degree", "circularity")

    def __init__(self, x0: RealPoly, x1: RealPoly, x2: RealPoly, x3: RealPoly):
        if x0.is_zero():
            raise Unbounded("x0 must be nonzero")
        g = real_gcd(real_gcd(x0, x1), real_gcd(x2, x3))
        if g.degree() > 0:
            x0, x1, x2, x3 = (real_quo(p, g) for p in (x0, x1, x2, x3))
        d = max(p.degree() for p in (x0, x1, x2, x3))
        if x0.degree() < d:
            raise Unbounded(f"deg x0 = {x0.degree()} < curve degree {d}")
        if count_real_roots(x0) > 0:
            raise Unbounded("x0 has a real zero")
        self.x0, self.x1, self.x2, self.x3 = x0, x1, x2, x3
        self.degree = d
        sphere = x1 * x1 + x2 * x2 + x3 * x3
        gc = real_gcd(x0, sphere) if not sphere.is_zero() else RealPoly.one()
        assert gc.degree() % 2 == 0
        self.circularity = gc.degree() // 2

    def coords(self) -> Tuple[RealPoly, RealPoly, RealPoly, RealPoly]:
        return (self.x0, self.x1, self.x2, self.x3)

    def evaluate(self, t) -> Vec3:
        w = self.x0.evaluate(t)
        return (self.x1.evaluate(t) / w,
                self.x2.evaluate(t) / w,
                self.x3.evaluate(t) / w)

    def point_at_infinity(self) -> Vec3:
        d = self.degree
        w = self.x0.coeff(d)
        return (self.x1.coeff(d) / w, self.x2.coeff(d) / w, self.x3.coeff(d) / w)

    def as_qpoly(self) -> QPoly:
        """The curve as x0 + x1 i + x2 j + x3 k in H[t]."""
        n = self.degree + 1
        return QPoly([Quaternion.of(self.x0.coeff(i), self.x1.coeff(i),
                                    self.x2.coeff(i), self.x3.coeff(i))
                      for i in range(n)])

    def is_normalized(self) -> bool:
        """x(infinity) = 1: x0 monic of degree d and deg xi < d."""
        d = self.degree
        return (self.x0.is_monic() and self.x0.degree() == d
                and all(p.degree() < d for p in (self.x1, self.x2, self.x3)))

    def translated(self, v: Vec3) -> "RationalCurve":
        """The curve moved by the vector v."""
        return RationalCurve(self.x0,
                             self.x1 + self.x0 * frac(v[0]),
                             self.x2 + self.x0 * frac(v[1]),
                             self.x3 + self.x0 * frac(v[2]))

    def canonical(self) -> Tuple[Tuple[Fraction, ...], ...]:
        lc = self.x0.lcoeff()
        return tuple(tuple(c / lc for c in p.coeffs)
                     for p in (self.x0, self.x1, self.x2, self.x3))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalCurve):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __repr__(self) -> str:
        return (f"RationalCurve(d={self.degree}, c={self.circularity}, "
                f"x0={self.x0!r}, x1={self.x1!r}, x2={self.x2!r}, x3={self.x3!r})")


def curve_load(x0: RealPoly, x1: RealPoly, x2: RealPoly, x3: RealPoly) -> RationalCurve:
    """Reduce and validate a parametric equation; raises Unbounded."""
    return RationalCurve(x0, x1, x2, x3)


def curve_normalize(curve: RationalCurve) -> Tuple[RationalCurve, FrameTransform]:
    """Translate and rescale so that x(infinity) = 1.

    Achievable for every bounded curve: divide all four coordinates by the
    leading coefficient of x0 (which moves no point), then translate space
    so the degree-d coefficients of x1, x2, x3 vanish.
    """
    d = curve.degree
    lc = curve.x0.lcoeff()
    v = (-curve.x1.coeff(d) / lc, -curve.x2.coeff(d) / lc, -curve.x3.coeff(d) / lc)
    moved = curve.translated(v)
    scaled = RationalCurve(*(p * (Fraction(1) / lc) for p in moved.coords()))
    assert scaled.is_normalized()
    return scaled, FrameTransform(v, lc)


class MotionPolynomial:
    """Polynomial over the dual quaternions with real nonzero norm and
    invertible leading coefficient; parameterizes a rational motion."""

    __slots__ = ("value",)

    def __init__(self, value: QPoly):
        if value.is_zero():
            raise NotMotionPolynomial("zero polynomial")
        if value.lcoeff().primal.is_zero():
            raise NotMotionPolynomial("leading coefficient not invertible")
        norm = value * value.conjugate()
        if not norm.is_real_poly():
            raise NotMotionPolynomial("Study condition fails: C conj(C) not real")
        self.value = value

    @staticmethod
    def from_parts(primal: QPoly, dual: QPoly) -> "MotionPolynomial":
        return MotionPolynomial(QPoly.from_parts(primal, dual))

    def primal(self) -> QPoly:
        return self.value.primal_part()

    def dual(self) -> QPoly:
        return self.value.dual_part()

    def degree(self) -> int:
        return self.value.degree()

    def is_monic(self) -> bool:
        return self.value.is_monic()

    def norm_poly(self) -> RealPoly:
        return (self.value * self.value.conjugate()).to_real()

    def primal_norm(self) -> RealPoly:
        p = self.primal()
        return (p * p.conjugate()).to_real()

    def is_bounded(self) -> bool:
        return count_real_roots(self.primal_norm()) == 0

    def spherical_defect(self) -> RealPoly:
        """Maximal real factor of the primal part."""
        return mrpf(self.primal())

    def __eq__(self, other) -> bool:
        if isinstance(other, MotionPolynomial):
            return self.value == other.value
        if isinstance(other, QPoly):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        return f"MotionPolynomial({self.value!r})"


def trajectory_poly(c: MotionPolynomial) -> QPoly:
    """Unreduced orbit of the affine origin: P conj(P) + 2 P conj(Q)."""
    p, q = c.primal(), c.dual()
    return p * p.conjugate() + 2 * (p * q.conjugate())


def trajectory(c: MotionPolynomial) -> RationalCurve:
    """The reduced rational curve drawn by the affine origin under c."""
    comps = trajectory_poly(c).component_polys()
    return curve_load(comps[0], comps[1], comps[2], comps[3])


def minmot(curve: RationalCurve) -> MotionPolynomial:
    """Monic motion polynomial of minimal degree d - c whose origin
    trajectory is the given normalized curve."""
    if not curve.is_normalized():
        raise NotMonic("curve must be normalized to x(infinity) = 1")
    x0 = curve.x0
    sphere = curve.x1 * curve.x1 + curve.x2 * curve.x2 + curve.x3 * curve.x3
    g = real_gcd(x0, sphere) if not sphere.is_zero() else RealPoly.one()
    w = real_quo(x0, g)
    d_poly = QPoly([Quaternion.of(0, curve.x1.coeff(i), curve.x2.coeff(i),
                                  curve.x3.coeff(i))
                    for i in range(curve.degree + 1)])
    if d_poly.is_zero():
        p_prime = QPoly.from_real(g)
    else:
        p_prime = lgcd(d_poly, QPoly.from_real(g))
    q_prime = rquo(d_poly, p_prime)
    primal = QPoly.from_real(w) * p_prime
    dual = q_prime.conjugate() * Fraction(1, 2)
    c = MotionPolynomial.from_parts(primal, dual)
    assert c.is_monic() and c.degree() == curve.degree - curve.circularity
    assert trajectory(c) == curve
    return c


def is_tame(c: MotionPolynomial) -> bool:
    """True iff mrpf(P) and Q conj(Q) are relatively prime."""
    p_factor = c.spherical_defect()
    q = c.dual()
    if q.is_zero():
        return p_factor.degree() == 0
    qnorm = (q * q.conjugate()).to_real()
    return real_gcd(p_factor, qnorm).degree() == 0


def czero(c, m: RealPoly) -> DualQuaternion:
    """Common zero of c and a quadratic factor m of c conj(c).

    The right remainder of c by m is linear, R = a t + b; the zero is
    h = -a^-1 b.  Raises NonInvertibleRemainderLead when a has zero primal
    part, which signals the non-generic case.
    """
    value = c.value if isinstance(c, MotionPolynomial) else c
    r = rrem(value, QPoly.from_real(m.monic()))
    a, b = r.coeff(1), r.coeff(0)
    if a.primal.is_zero():
        raise NonInvertibleRemainderLead(
            "linear remainder has non-invertible leading coefficient")
    return -(a.inverse() * b)


@dataclass(frozen=True)
class Factorization:
    """Linear factors t - h_i and cofactor H with prod (t - h_i) = C H."""

    factors: Tuple[RotationQuaternion, ...]
    cofactor: QPoly

    def linear_polys(self) -> List[QPoly]:
        return [QPoly.linear(h.value) for h in self.factors]

    def product(self) -> QPoly:
        acc = QPoly.one()
        for lin in self.linear_polys():
            acc = acc * lin
        return acc

    def __len__(self) -> int:
        return len(self.factors)


def _validate_factor_order(c: MotionPolynomial,
                           order: Optional[Sequence[RealPoly]]) -> List[RealPoly]:
    default = quad_factors(c.norm_poly().monic())
    if order is None:
        return default
    order = [m.monic() for m in order]
    if sorted(tuple(m.coeffs) for m in order) != sorted(tuple(m.coeffs) for m in default):
        raise ValueError("order must be a permutation of the quadratic factors "
                         "of C conj(C)")
    return list(order)


def gfactor(c: MotionPolynomial,
            order: Optional[Sequence[RealPoly]] = None) -> Factorization:
    """Factor a generic (zero spherical defect), monic, bounded motion
    polynomial into linear rotation factors; order of the quadratic factors
    of the norm may be supplied and selects among the factorizations."""
    if not c.is_monic():
        raise NotMonic("factorization needs a monic motion polynomial")
    if c.spherical_defect().degree() != 0:
        raise NotGeneric("motion polynomial has a nontrivial real primal factor")
    if not c.is_bounded():
        raise NotMotionPolynomial("motion polynomial is not bounded")
    ms = _validate_factor_order(c, order)
    rest = c.value
    factors: List[RotationQuaternion] = []
    for m in ms:
        h = czero(rest, m)
        factors.insert(0, RotationQuaternion(h))
        rest = lquo(rest, QPoly.linear(h))
    assert rest == QPoly.one()
    result = Factorization(tuple(factors), QPoly.one())
    assert result.product() == c.value
    return result


DEFAULT_ZERO_DIRECTIONS: Tuple[Vec3, ...] = (
    vec3(0, 0, 1), vec3(1, 0, 0), vec3(0, 1, 0),
    vec3(1, 1, 0), vec3(0, 1, 1), vec3(1, 0, 1), vec3(1, 1, 1),
)


def candidate_zeros(f: RealPoly,
                    directions: Optional[Sequence[Vec3]] = None,
                    seed: int = 0,
                    budget: int = 64) -> Iterator[Quaternion]:
    """Quaternion zeros of the irreducible quadratic f, deterministically:
    preferred directions first, then zeros built from three-squares
    decompositions of the cleared radicand, then a seeded random tail."""
    b, cc = check_irreducible_quadratic(f)
    seen = set()
    count = 0

    def emit(z: Quaternion):
        nonlocal count
        if z not in seen:
            seen.add(z)
            count += 1
            return z
        return None

    for v in list(directions or ()) + list(DEFAULT_ZERO_DIRECTIONS):
        try:
            z = quad_zero(f, vec3(*v))
        except NoRationalZeroInDirection:
            continue
        out = emit(z)
        if out is not None:
            yield out
        if count >= budget:
            return
    # systematic zeros from integer three-squares decompositions
    r = (4 * cc - b * b)
    num, den = r.numerator, r.denominator
    for k in range(1, 6):
        decomp = three_square_decomposition(num * den * k * k)
        if decomp is None:
            continue
        base = [Fraction(a, den * k) for a in decomp]
        for perm in sorted(set(itertools.permutations(base))):
            for signs in itertools.product((1, -1), repeat=3):
                s = [sg * co for sg, co in zip(signs, perm)]
                z = Quaternion.of(-b / 2, s[0] / 2, s[1] / 2, s[2] / 2)
                if z.vector() == (0, 0, 0):
                    continue
                out = emit(z)
                if out is not None:
                    yield out
                if count >= budget:
                    return
    rng = random.Random(seed)
    for _ in range(budget):
        v = vec3(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(-9, 9))
        if v == (0, 0, 0):
            continue
        try:
            z = quad_zero(f, v)
        except NoRationalZeroInDirection:
            continue
        out = emit(z)
        if out is not None:
            yield out


def tfactor(c: MotionPolynomial,
            directions: Optional[Sequence[Vec3]] = None,
            seed: int = 0) -> Factorization:
    """Factor a tame, monic, bounded motion polynomial.

    Returns factors and a quaternion cofactor H with exact product identity
    prod (t - h_i) = C H and deg H = (1/2) deg mrpf(P).  Each recursion step
    peels one irreducible quadratic factor F off mrpf(P); candidate zeros of
    F that hit a dangerous configuration are detected by downstream failure
    and retried.
    """
    if not c.is_monic():
        raise NotMonic("factorization needs a monic motion polynomial")
    if not c.is_bounded():
        raise NotMotionPolynomial("motion polynomial is not bounded")
    if not is_tame(c):
        raise NotTame("mrpf(P) and Q conj(Q) share a factor")
    result = _tfactor_rec(c, directions, seed)
    assert result.product() == c.value * result.cofactor
    assert result.cofactor.degree() == c.spherical_defect().degree() // 2
    return result


def _tfactor_rec(c: MotionPolynomial,
                 directions: Optional[Sequence[Vec3]],
                 seed: int) -> Factorization:
    p = c.primal()
    p_real = mrpf(p)
    if p_real.degree() == 0:
        return gfactor(c)
    f = quad_factors(p_real)[0]
    q = c.dual()
    p_over_f = divide_by_real(p, f)
    failures = []
    for h in candidate_zeros(f, directions, seed):
        lin = QPoly.linear(h)
        e = (q * lin).conjugate()
        try:
            z = czero(e, f)
        except NonInvertibleRemainderLead as exc:
            failures.append(exc)
            continue
        h_prime = z.conjugate()
        lin_prime = QPoly.linear(h_prime)
        p_next = lin_prime.conjugate() * p_over_f * lin
        q_next, rem = rqr(e.conjugate(), lin_prime)
        assert rem.is_zero()
        try:
            c_next = MotionPolynomial.from_parts(p_next, q_next)
            if not c_next.is_bounded() or not is_tame(c_next):
                raise NotTame("candidate zero produced an untame remainder motion")
            sub = _tfactor_rec(c_next, directions, seed)
        except (NotMotionPolynomial, NotTame, NotGeneric, NotRotation,
                NonInvertibleRemainderLead, HasRealRoot, ZeroPickExhausted) as exc:
            failures.append(exc)
            continue
        factors = (RotationQuaternion.wrap(h_prime),) + sub.factors
        return Factorization(factors, lin * sub.cofactor)
    raise ZeroPickExhausted(
        f"all candidate zeros of {f!r} failed downstream: {failures!r}")
