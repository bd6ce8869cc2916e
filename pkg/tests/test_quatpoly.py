"""Non-commutative polynomial division, left gcd, real factors, zeros."""

import random
from fractions import Fraction

import pytest

from conftest import P, dq, random_dual_quaternion

from scissorlink.algebra import Q_I, Q_J, Q_K, Quaternion, vec3
from scissorlink.errors import (
    NoRationalZeroInDirection,
    NotMonic,
    NotRepresentable,
    ZeroPolynomial,
)
from scissorlink.quatpoly import (
    QPoly,
    divide_by_real,
    lgcd,
    lqr,
    lrem,
    mrpf,
    quad_zero,
    rqr,
    rrem,
)
from scissorlink.threesquares import (
    is_three_square_representable,
    rational_sphere_point,
    three_square_decomposition,
)


def random_qpoly(rng: random.Random, max_degree: int = 6) -> QPoly:
    n = rng.randint(0, max_degree)
    return QPoly([random_dual_quaternion(rng) for _ in range(n + 1)])


class TestDivision:
    def test_t_is_central(self):
        # coefficients do not commute, so neither do the polynomials
        f = QPoly([Q_I, Q_J])
        g = QPoly([Q_K, Q_I])
        assert f * g != g * f

    def test_right_division_oracle(self):
        # [DERIVED] t^2 + 1 = (t - i)(t + i) but with j: t^2+1 by t-j
        q, r = rqr(QPoly([1, 0, 1]), QPoly.linear(Q_J))
        assert q == QPoly([Q_J, 1])
        assert r.is_zero()

    def test_monic_required(self):
        with pytest.raises(NotMonic):
            rqr(QPoly([1]), QPoly([1, Q_I + Q_I]))

    def test_reconstruction_seeded(self):
        # 200 seeded pairs, degrees <= 6, exact reconstruction both sides
        rng = random.Random(99)
        for _ in range(200):
            f = random_qpoly(rng)
            g = random_qpoly(rng)
            if g.is_zero() or g.lcoeff().primal.is_zero():
                continue
            g = g * g.lcoeff().inverse()
            q, r = rqr(f, g)
            assert g * q + r == f
            assert r.is_zero() or r.degree() < g.degree()
            q, r = lqr(f, g)
            assert q * g + r == f
            assert r.is_zero() or r.degree() < g.degree()

    def test_evaluation_right_rule(self):
        # right evaluation: t - h vanishes at h, and left factors do not
        h = dq(0, 0, 0, 1, 0, 0, 1)
        f = QPoly([Q_I, 1]) * QPoly.linear(h)
        assert f.evaluate(h).is_zero()
        assert not QPoly.linear(h).__mul__(QPoly([Q_I, 1])).evaluate(h).is_zero()


class TestLgcd:
    def test_common_left_factor(self):
        left = QPoly.linear(Q_K)
        f = left * QPoly([Q_I, Q_J, 1])
        g = left * QPoly([1, Q_K])
        d = lgcd(f, g * g.lcoeff().inverse())
        assert rrem(f, d).is_zero() and rrem(g, d).is_zero()
        assert d.degree() == 1

    def test_coprime(self):
        # t - i and t - j share no left factor of positive degree
        d = lgcd(QPoly.linear(Q_I), QPoly.linear(Q_J))
        assert d.degree() == 0


class TestMrpf:
    def test_real_factor(self):
        f = QPoly.from_real(P(1, 0, 1)) * QPoly([Q_I, Q_J, 1])
        assert mrpf(f) == P(1, 0, 1)

    def test_constant_for_generic(self):
        assert mrpf(QPoly([Q_I, 1])).degree() == 0

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            mrpf(QPoly.zero())

    def test_divide_by_real(self):
        f = QPoly.from_real(P(2, 0, 2)) * QPoly([Q_J, 1])
        assert divide_by_real(f, P(2, 0, 2)) == QPoly([Q_J, 1])
        with pytest.raises(ZeroPolynomial):
            divide_by_real(QPoly([Q_I]), P(1, 0, 1))


class TestQuadZero:
    def test_unit_directions(self):
        # zeros of t^2 + 1 along coordinate directions are the units
        assert quad_zero(P(1, 0, 1), vec3(0, 0, 1)) == Quaternion.of(0, 0, 0, 1)
        assert quad_zero(P(1, 0, 1), vec3(1, 0, 0)) == Quaternion.of(0, 1, 0, 0)

    def test_scaled_direction(self):
        # [DERIVED] t^2 + 1 in direction (3, 4, 0): lambda^2 = 4/25,
        # zero = (3i + 4j)/5, which squares to -1
        z = quad_zero(P(1, 0, 1), vec3(3, 4, 0))
        assert z == Quaternion.of(0, Fraction(3, 5), Fraction(4, 5), 0)
        assert z * z == Quaternion.of(-1)

    def test_substitutes_to_zero(self):
        f = P(2, -2, 1)
        z = quad_zero(f, vec3(0, 1, 0))
        assert z * z - Fraction(2) * z + Quaternion.of(2) == Quaternion.of(0)

    def test_irrational_direction_rejected(self):
        with pytest.raises(NoRationalZeroInDirection):
            quad_zero(P(1, 0, 1), vec3(1, 1, 0))  # lambda^2 = 2


class TestThreeSquares:
    def test_legendre_criterion(self):
        assert is_three_square_representable(6)
        assert not is_three_square_representable(7)
        assert not is_three_square_representable(28)  # 4 * 7
        assert is_three_square_representable(0)

    def test_decomposition(self):
        for n in (1, 2, 3, 5, 6, 9, 11, 50, 101):
            a, b, c = three_square_decomposition(n)
            assert a * a + b * b + c * c == n
        assert three_square_decomposition(15) is None

    def test_sphere_point(self):
        s = rational_sphere_point(Fraction(2, 3))
        assert sum(x * x for x in s) == Fraction(2, 3)
        with pytest.raises(NotRepresentable):
            rational_sphere_point(Fraction(7, 1))
