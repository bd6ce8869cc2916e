"""Dense univariate polynomials over the rationals.

Coefficient lists are ascending in the power of t, stored as Fractions with
the leading coefficient nonzero (the zero polynomial has an empty list).
Everything is exact: division, gcd, Sturm root counting and factorization
into irreducible quadratics never approximate.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

import sympy

from .errors import (
    DivisionByZeroPoly,
    HasRealRoot,
    IrreducibleFactorNotQuadraticOverRationals,
    NotIrreducible,
    ZeroPolynomial,
)


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class RealPoly:
    """Polynomial in R[t] with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    # -- construction -------------------------------------------------------

    @staticmethod
    def zero() -> "RealPoly":
        return RealPoly([])

    @staticmethod
    def one() -> "RealPoly":
        return RealPoly([1])

    @staticmethod
    def constant(c) -> "RealPoly":
        return RealPoly([c])

    @staticmethod
    def monomial(c, power: int) -> "RealPoly":
        return RealPoly([0] * power + [c])

    @staticmethod
    def t() -> "RealPoly":
        return RealPoly([0, 1])

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def lcoeff(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RealPoly([other])
        if not isinstance(other, RealPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other) -> "RealPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return RealPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other) -> "RealPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return RealPoly([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __rsub__(self, other) -> "RealPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> "RealPoly":
        return RealPoly([-c for c in self.coeffs])

    def __mul__(self, other) -> "RealPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RealPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RealPoly(out)

    __rmul__ = __mul__

    @staticmethod
    def _coerce(x) -> "RealPoly | None":
        if isinstance(x, RealPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return RealPoly([x])
        return None

    def monic(self) -> "RealPoly":
        if self.is_zero():
            return self
        lc = self.lcoeff()
        return RealPoly([c / lc for c in self.coeffs])

    def evaluate(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * _frac(t) + c
        return acc

    def derivative(self) -> "RealPoly":
        return RealPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __repr__(self) -> str:
        if self.is_zero():
            return "RealPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(f"{c}*t^{i}" if i else f"{c}")
        return "RealPoly(" + " + ".join(terms) + ")"


def real_divmod(f: RealPoly, g: RealPoly) -> Tuple[RealPoly, RealPoly]:
    """Quotient and remainder of commutative polynomial division."""
    if g.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    gdeg, glc = g.degree(), g.lcoeff()
    qdeg = f.degree() - gdeg
    if qdeg < 0:
        return RealPoly.zero(), f
    r = list(f.coeffs)
    q = [Fraction(0)] * (qdeg + 1)
    for shift in range(qdeg, -1, -1):
        c = r[shift + gdeg] / glc
        if c == 0:
            continue
        q[shift] = c
        for i, gc in enumerate(g.coeffs):
            r[shift + i] -= c * gc
    return RealPoly(q), RealPoly(r)


def real_quo(f: RealPoly, g: RealPoly) -> RealPoly:
    return real_divmod(f, g)[0]


def real_rem(f: RealPoly, g: RealPoly) -> RealPoly:
    return real_divmod(f, g)[1]


def real_gcd(f: RealPoly, g: RealPoly) -> RealPoly:
    """Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, real_rem(a, b)
    return a.monic() if not a.is_zero() else a


def divides_exactly(g: RealPoly, f: RealPoly) -> bool:
    return real_rem(f, g).is_zero()


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _sign_variations(signs: Sequence[int]) -> int:
    filtered = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(filtered, filtered[1:]) if a * b < 0)


def count_real_roots(f: RealPoly) -> int:
    """Number of distinct real roots, by exact Sturm sign-variation counting
    over the whole real line."""
    if f.is_zero():
        raise ZeroPolynomial("root count undefined for the zero polynomial")
    sf = real_quo(f, real_gcd(f, f.derivative())) if f.degree() > 0 else f
    if sf.degree() <= 0:
        return 0
    chain: List[RealPoly] = [sf, sf.derivative()]
    while chain[-1].degree() > 0:
        chain.append(-real_rem(chain[-2], chain[-1]))
    if chain[-1].is_zero():
        chain.pop()
    # signs at -inf / +inf from leading terms
    at_minus = [_sign(p.lcoeff()) * (-1) ** p.degree() for p in chain if not p.is_zero()]
    at_plus = [_sign(p.lcoeff()) for p in chain if not p.is_zero()]
    return _sign_variations(at_minus) - _sign_variations(at_plus)


def _from_sympy(expr, t) -> RealPoly:
    poly = sympy.Poly(expr, t)
    coeffs = [Fraction(c.p, c.q) for c in poly.all_coeffs()]
    return RealPoly(list(reversed(coeffs)))


def _to_sympy(f: RealPoly, t):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator)
                       for c in reversed(f.coeffs)], t)


def quad_factors(f: RealPoly) -> List[RealPoly]:
    """Split a monic, strictly positive real polynomial into its monic
    irreducible quadratic factors, multiplicities repeated.

    The factorization runs over the rationals; a rational-irreducible factor
    of degree >= 4 would need a real quadratic extension to split further and
    is rejected with a typed error instead of being approximated.
    """
    if f.is_zero() or not f.is_monic():
        raise ZeroPolynomial("input must be monic and nonzero")
    if f.degree() == 0:
        return []
    if f.degree() % 2 != 0 or count_real_roots(f) > 0:
        raise HasRealRoot(f"{f!r} has a real root")
    t = sympy.Symbol("t")
    _, factors = _to_sympy(f, t).factor_list()
    out: List[RealPoly] = []
    for fac, mult in factors:
        g = _from_sympy(fac, t).monic()
        if g.degree() != 2:
            raise IrreducibleFactorNotQuadraticOverRationals(
                f"irreducible factor {g!r} of degree {g.degree()} needs a "
                "field extension to split into real quadratics")
        out.extend([g] * mult)
    out.sort(key=lambda p: tuple(p.coeffs))
    assert _product(out) == f
    return out


def _product(ps: Sequence[RealPoly]) -> RealPoly:
    acc = RealPoly.one()
    for p in ps:
        acc = acc * p
    return acc


def is_irreducible_quadratic(f: RealPoly) -> bool:
    if f.degree() != 2:
        return False
    b = f.coeff(1) / f.coeff(2)
    c = f.coeff(0) / f.coeff(2)
    return 4 * c - b * b > 0


def check_irreducible_quadratic(f: RealPoly) -> Tuple[Fraction, Fraction]:
    """Return (b, c) of the monic form t^2 + b t + c; raise if reducible."""
    if f.degree() != 2:
        raise NotIrreducible(f"{f!r} is not quadratic")
    b = f.coeff(1) / f.coeff(2)
    c = f.coeff(0) / f.coeff(2)
    if 4 * c - b * b <= 0:
        raise NotIrreducible(f"{f!r} is reducible over the reals")
    return b, c
