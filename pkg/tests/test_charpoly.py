from fractions import Fraction as F

import pytest

from invineq.charpoly import (
    char_coeff,
    char_poly,
    char_poly_by_summation,
    det_prefactor,
    inverse_column,
    recurrence_residual,
    verify_inverse_identity,
    verify_recurrence,
)
from invineq.polynomial import RatPoly


class TestCharCoeff:
    def test_f1_small(self):
        assert char_coeff(1, 2) == 3
        # closed form n(n-1)(n+1)(n+2)/8
        for n in range(2, 30):
            assert char_coeff(1, n) == F(n * (n - 1) * (n + 1) * (n + 2), 8)

    def test_f0_is_one(self):
        for n in (0, 1, 5, 40):
            assert char_coeff(0, n) == 1

    def test_f2_of_4(self):
        assert char_coeff(2, 4) == 105

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            char_coeff(2, 3)
        with pytest.raises(ValueError):
            char_coeff(-1, 3)


class TestCharPoly:
    def test_small_instances(self):
        assert char_poly(0).poly == RatPoly((1,))
        assert char_poly(1).poly == RatPoly((1,))
        assert char_poly(2).poly == RatPoly((-3, 1))
        assert char_poly(3).poly == RatPoly((-15, 1))
        assert char_poly(4).poly == RatPoly((105, -45, 1))
        assert char_poly(6).poly == RatPoly((-10395, 4725, -210, 1))

    def test_monic_degree(self):
        for n in range(0, 40):
            cp = char_poly(n)
            assert cp.nu == n // 2
            assert cp.poly.degree == cp.nu
            assert cp.poly.leading == 1

    def test_two_routes_agree(self):
        for n in range(0, 101):
            assert char_poly(n).poly == char_poly_by_summation(n).poly

    def test_sign_alternation(self):
        for n in range(2, 60):
            poly = char_poly(n).poly
            nu = poly.degree
            for j in range(nu + 1):
                assert (-1) ** j * poly.coeff(nu - j) > 0

    def test_integer_coefficients(self):
        for n in range(0, 50):
            assert all(c.denominator == 1 for c in char_poly(n).poly.coeffs)


class TestCoefficientDominance:
    def test_exact_dominance(self):
        # (f1/2) f_j > f_{j+1} for 1 <= j <= nu-1
        for n in range(2, 201):
            half_f1 = char_coeff(1, n) / 2
            for j in range(1, n // 2):
                assert half_f1 * char_coeff(j, n) > char_coeff(j + 1, n)


class TestPrefactor:
    def test_values(self):
        assert det_prefactor(0, 1).value == F(1, 3)
        assert det_prefactor(1, 1).value == 1
        assert det_prefactor(0, 0).value == 1
        assert det_prefactor(1, 0).value == 1

    def test_positive(self):
        for ell in (0, 1):
            for n in range(0, 20):
                assert det_prefactor(ell, n).value > 0


class TestInverseColumn:
    def test_frozen_small_values(self):
        assert inverse_column(0, 1).entries == (RatPoly((-3,)),)
        assert inverse_column(1, 1).entries == (RatPoly((-1,)),)
        assert inverse_column(0, 2).entries == (
            RatPoly((F(-525, 4), F(105, 4))),
            RatPoly((F(525, 4), F(-175, 4))),
        )
        assert inverse_column(1, 2).entries == (
            RatPoly((0, F(15, 4))),
            RatPoly((0, F(-45, 4))),
        )

    def test_entry_degrees(self):
        for ell in (0, 1):
            for n in (1, 3, 5):
                col = inverse_column(ell, n)
                assert len(col.entries) == n
                assert all(e.degree <= n - 1 for e in col.entries)


class TestInverseIdentity:
    def test_tiny_cases(self):
        assert verify_inverse_identity(0, 1).ok
        assert verify_inverse_identity(1, 1).ok

    @pytest.mark.parametrize("ell", [0, 1])
    @pytest.mark.parametrize("n", range(1, 7))
    def test_small_range(self, ell, n):
        report = verify_inverse_identity(ell, n)
        assert report.ok, report.failures

    def test_failure_reports_row_and_residual(self):
        # Sanity on the reporting shape via a healthy case
        assert verify_inverse_identity(0, 3).failures == ()


class TestRecurrence:
    def test_n0_expansion(self):
        # 3*P4 + 5*(21-2x)*P2 + 7*x^2*P0 == 0
        p0, p2, p4 = (char_poly(k).poly for k in (0, 2, 4))
        lhs = 3 * p4 + 5 * (RatPoly((21, -2)) * p2) + 7 * p0.shift_up(2)
        assert lhs.is_zero()
        assert recurrence_residual(0).is_zero()

    def test_n1(self):
        assert recurrence_residual(1).is_zero()

    def test_range(self):
        assert verify_recurrence(50).ok
