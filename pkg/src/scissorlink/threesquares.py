"""Rational points on spheres via the three-squares theorem.

A positive rational p/q is a sum of three rational squares exactly when the
integer p*q is a sum of three integer squares, i.e. not of the form
4^a (8b + 7).  The search clears denominators and enumerates integer
decompositions deterministically.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Optional, Tuple

from .errors import NotRepresentable, SearchExhausted

DEFAULT_HEIGHT_BOUND = 10_000


def _strip_fours(n: int) -> int:
    while n % 4 == 0:
        n //= 4
    return n


def is_three_square_representable(n: int) -> bool:
    """Legendre's criterion for integers; by clearing denominators it also
    decides representability of rationals."""
    if n < 0:
        return False
    if n == 0:
        return True
    return _strip_fours(n) % 8 != 7


def three_square_decomposition(n: int) -> Optional[Tuple[int, int, int]]:
    """Some (a, b, c) with a^2 + b^2 + c^2 = n, ascending, or None."""
    if not is_three_square_representable(n):
        return None
    for a in range(isqrt(n // 3) + 1):
        rest = n - a * a
        b = a
        while 2 * b * b <= rest:
            c2 = rest - b * b
            c = isqrt(c2)
            if c * c == c2:
                return (a, b, c)
            b += 1
    return None


def rational_sphere_point(r, height_bound: int = DEFAULT_HEIGHT_BOUND):
    """Exact rational (s1, s2, s3) with s1^2 + s2^2 + s3^2 = r, for r > 0.

    Raises NotRepresentable on the classical obstruction and SearchExhausted
    when the cleared integer exceeds the height bound.
    """
    r = Fraction(r)
    if r <= 0:
        raise ValueError("squared radius must be positive")
    p, q = r.numerator, r.denominator
    n = p * q
    if not is_three_square_representable(n):
        raise NotRepresentable(f"{r} is not a sum of three rational squares")
    if n > height_bound * height_bound:
        raise SearchExhausted(f"cleared integer {n} exceeds height bound {height_bound}")
    decomp = three_square_decomposition(n)
    assert decomp is not None
    # s_i = a_i / q satisfies sum s_i^2 = n / q^2 = p/q
    return tuple(Fraction(a, q) for a in decomp)
