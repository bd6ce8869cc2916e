"""Real polynomial arithmetic, Sturm root counting and quadratic factors."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import P

from scissorlink.errors import (
    DivisionByZeroPoly,
    HasRealRoot,
    IrreducibleFactorNotQuadraticOverRationals,
    NotIrreducible,
)
from scissorlink.realpoly import (
    RealPoly,
    check_irreducible_quadratic,
    count_real_roots,
    divides_exactly,
    is_irreducible_quadratic,
    quad_factors,
    real_divmod,
    real_gcd,
    real_quo,
    real_rem,
)

coeff_lists = st.lists(
    st.fractions(min_value=-20, max_value=20, max_denominator=6),
    min_size=0, max_size=7)


class TestArithmetic:
    def test_divmod_oracle(self):
        # [DERIVED] t^3 + 1 = (t^2 - t + 1)(t + 1)
        q, r = real_divmod(P(1, 0, 0, 1), P(1, 1))
        assert q == P(1, -1, 1)
        assert r.is_zero()

    def test_divmod_remainder(self):
        q, r = real_divmod(P(0, 0, 1), P(1, 0, 2))  # t^2 by 2t^2+1
        assert q == P(Fraction(1, 2))
        assert r == P(Fraction(-1, 2))

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZeroPoly):
            real_divmod(P(1), P())

    @given(coeff_lists, coeff_lists)
    def test_divmod_reconstruction(self, fc, gc):
        f, g = RealPoly(fc), RealPoly(gc)
        if g.is_zero():
            return
        q, r = real_divmod(f, g)
        assert g * q + r == f
        assert r.is_zero() or r.degree() < g.degree()

    def test_gcd(self):
        # [DERIVED] gcd((t^2+1)(t-1), (t^2+1)(t+2)) = t^2+1, monic
        f = P(1, 0, 1) * P(-1, 1)
        g = P(1, 0, 1) * P(2, 1)
        assert real_gcd(f, g) == P(1, 0, 1)
        assert real_gcd(P(), P()).is_zero()
        assert real_gcd(f, P()) == f.monic()

    def test_divides_exactly(self):
        assert divides_exactly(P(1, 0, 1), P(1, 0, 2, 0, 1))
        assert not divides_exactly(P(1, 1), P(1, 0, 1))


class TestSturm:
    def test_counts(self):
        assert count_real_roots(P(1, 0, 1)) == 0       # t^2+1
        assert count_real_roots(P(-1, 0, 1)) == 2      # t^2-1
        assert count_real_roots(P(0, 1)) == 1          # t
        # distinct roots only: (t-1)^2 counts once
        assert count_real_roots(P(1, -2, 1)) == 1
        # [DERIVED] t^3 - 3t has roots 0, +-sqrt(3)
        assert count_real_roots(P(0, -3, 0, 1)) == 3


class TestQuadFactors:
    def test_product_and_discriminants(self):
        f = (P(1, 0, 1) * P(2, 0, 1) * P(5, 4, 1)).monic()
        ms = quad_factors(f)
        assert len(ms) == 3
        prod = RealPoly.one()
        for m in ms:
            b, c = check_irreducible_quadratic(m)
            assert b * b - 4 * c < 0
            prod = prod * m
        assert prod == f
        # deterministic order: sorted by coefficient tuples
        assert [tuple(m.coeffs) for m in ms] == sorted(tuple(m.coeffs) for m in ms)

    def test_repeated_factor(self):
        ms = quad_factors(P(1, 0, 2, 0, 1))  # (t^2+1)^2
        assert ms == [P(1, 0, 1), P(1, 0, 1)]

    def test_real_root_rejected(self):
        with pytest.raises(HasRealRoot):
            quad_factors(P(-1, 0, 1))

    def test_quartic_irreducible_over_rationals(self):
        # t^4 + 4t^2 + 2 is irreducible over Q (Eisenstein at 2) but splits
        # into two real quadratics only over an extension field
        with pytest.raises(IrreducibleFactorNotQuadraticOverRationals):
            quad_factors(P(2, 0, 4, 0, 1))

    def test_irreducible_quadratic_check(self):
        assert is_irreducible_quadratic(P(1, 0, 1))
        assert not is_irreducible_quadratic(P(-1, 0, 1))
        assert not is_irreducible_quadratic(P(1, 1))
        with pytest.raises(NotIrreducible):
            check_irreducible_quadratic(P(0, 0, 1))
        assert check_irreducible_quadratic(P(2, -2, 1)) == (Fraction(-2), Fraction(2))
