from fractions import Fraction as F

import pytest

from invineq.matrices import (
    build_boundary,
    build_legendre_hook,
    build_mass,
    build_mass_1d,
    build_parity_block,
    build_pencil,
    build_stiffness,
    build_stiffness_1d,
    index_split,
    kronecker,
    parity_permutation,
    split_parity_blocks,
    RatMatrix,
)
from invineq.polynomial import RatPoly


def monomial_integral(p: int) -> F:
    """Oracle: integral of x**p over (-1, 1)."""
    return F(2, p + 1) if p % 2 == 0 else F(0)


class TestIndexSplit:
    def test_first_and_last(self):
        assert index_split(1, 3) == (0, 0)
        assert index_split(9, 3) == (2, 2)

    def test_middle(self):
        assert index_split(5, 3) == (1, 1)

    def test_round_trip(self):
        for n in (1, 2, 5):
            for k in range(1, n * n + 1):
                chi, rho = index_split(k, n)
                assert k == chi * n + rho + 1
                assert 0 <= chi < n and 0 <= rho < n

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            index_split(0, 3)
        with pytest.raises(ValueError):
            index_split(10, 3)


class TestMassStiffness:
    def test_n1(self):
        assert build_mass(1).entries == ((F(4),),)
        assert build_stiffness(1).entries == ((F(0),),)

    def test_n2_diagonal(self):
        m = build_mass(2)
        assert m[0, 0] == 4
        assert m[1, 1] == F(4, 3)

    def test_against_integral_oracle(self):
        for n in (1, 2, 3, 4):
            m = build_mass(n)
            k = build_stiffness(n)
            for i in range(1, n * n + 1):
                chi_i, rho_i = index_split(i, n)
                for j in range(1, n * n + 1):
                    chi_j, rho_j = index_split(j, n)
                    assert m[i - 1, j - 1] == (
                        monomial_integral(rho_i + rho_j) * monomial_integral(chi_i + chi_j)
                    )
                    if rho_i >= 1 and rho_j >= 1:
                        expect = (
                            rho_i * rho_j
                            * monomial_integral(rho_i + rho_j - 2)
                            * monomial_integral(chi_i + chi_j)
                        )
                    else:
                        expect = F(0)
                    assert k[i - 1, j - 1] == expect

    def test_odd_parity_entries_vanish(self):
        m = build_mass(3)
        for i in range(1, 10):
            chi_i, rho_i = index_split(i, 3)
            for j in range(1, 10):
                chi_j, rho_j = index_split(j, 3)
                if (rho_i + rho_j) % 2 == 1:
                    assert m[i - 1, j - 1] == 0

    def test_symmetry(self):
        for n in (2, 3, 4):
            assert build_mass(n).is_symmetric()
            assert build_stiffness(n).is_symmetric()


class TestOneDimensionalFactors:
    def test_small_values(self):
        assert build_mass_1d(1).entries == ((F(2),),)
        assert build_stiffness_1d(1).entries == ((F(0),),)
        assert build_mass_1d(2)[0, 1] == 0

    def test_degenerate_denominator_entry(self):
        # i + j == 3 hits a zero denominator in the raw formula; the parity
        # factor forces the entry to 0 before any division.
        b = build_stiffness_1d(3)
        assert b[0, 1] == 0 and b[1, 0] == 0
        assert b[1, 1] == 2

    def test_symmetry(self):
        for n in (2, 3, 5):
            assert build_mass_1d(n).is_symmetric()
            assert build_stiffness_1d(n).is_symmetric()


class TestKronecker:
    def test_one_by_one(self):
        assert kronecker(
            RatMatrix(((F(2),),)), RatMatrix(((F(2),),))
        ).entries == ((F(4),),)

    def test_mass_factorization(self):
        for n in range(1, 7):
            a = build_mass_1d(n)
            assert kronecker(a, a) == build_mass(n)

    def test_stiffness_factorization(self):
        for n in range(1, 7):
            a = build_mass_1d(n)
            b = build_stiffness_1d(n)
            assert kronecker(a, b) == build_stiffness(n)


class TestPencil:
    def test_n1(self):
        assert build_pencil(1)[0, 0] == RatPoly((0, -2))

    def test_parity_zeros(self):
        p = build_pencil(4)
        for i in range(4):
            for j in range(4):
                if (i + j) % 2 == 1:  # 1-based i+j odd
                    assert p[i, j].is_zero()

    def test_n2_diagonal_entry(self):
        assert build_pencil(2)[1, 1] == RatPoly((2, F(-2, 3)))

    def test_symmetry(self):
        for n in (2, 3, 6):
            assert build_pencil(n).is_symmetric()


class TestParityBlocks:
    def test_displayed_entries(self):
        assert build_parity_block(0, 1)[0, 0] == RatPoly((1, F(-1, 3)))
        assert build_parity_block(1, 1)[0, 0] == RatPoly((0, -1))
        assert build_parity_block(0, 2)[1, 1] == RatPoly((F(9, 5), F(-1, 7)))
        assert build_parity_block(1, 2)[1, 1] == RatPoly((F(4, 3), F(-1, 5)))

    def test_block_decomposition(self):
        for n in range(1, 8):
            pencil = build_pencil(n)
            perm, top, bottom = split_parity_blocks(pencil)
            assert sorted(perm) == list(range(n))
            half = n // 2
            expect_top = build_parity_block(0, half)
            expect_bottom = build_parity_block(1, n - half)
            for i in range(half):
                for j in range(half):
                    assert top[i, j] == 2 * expect_top[i, j]
            for i in range(n - half):
                for j in range(n - half):
                    assert bottom[i, j] == 2 * expect_bottom[i, j]
            # off-diagonal blocks vanish under the permutation
            for i in range(half):
                for j in range(half, n):
                    assert pencil[perm[i], perm[j]].is_zero()

    def test_permutation_order(self):
        assert parity_permutation(5) == (1, 3, 0, 2, 4)


class TestBoundary:
    def test_full_n1(self):
        assert build_boundary("full", 1)[0, 0] == RatPoly((2, F(-2, 3)))

    def test_parity0_n1(self):
        assert build_boundary(0, 1)[0, 0] == RatPoly((2, F(-2, 5)))

    def test_offdiagonal_constant(self):
        c0 = build_boundary(0, 3)
        for i in range(3):
            for j in range(3):
                if i != j:
                    assert c0[i, j] == RatPoly((2,))

    def test_full_parity_pattern(self):
        c = build_boundary("full", 4)
        for i in range(4):
            for j in range(4):
                if (i + j) % 2 == 1:  # 1-based i+j odd: constant part vanishes
                    assert c[i, j].coeff(0) == 0

    def test_boundary_block_decomposition(self):
        for n in range(1, 8):
            full = build_boundary("full", n)
            perm, top, bottom = split_parity_blocks(full)
            half = n // 2
            assert top == build_boundary(0, half)
            assert bottom == build_boundary(1, n - half)


class TestLegendreHooks:
    def test_displayed_matrix_parity1(self):
        h = build_legendre_hook(1, 2)
        assert h[0, 0] == RatPoly((2, F(-2, 3)))
        assert h[0, 1] == RatPoly((2,))
        assert h[1, 1] == RatPoly((12, F(-2, 7)))

    def test_parity0_first_entry(self):
        assert build_legendre_hook(0, 1)[0, 0] == RatPoly((6, F(-2, 5)))

    def test_symmetry(self):
        for parity in (0, 1):
            assert build_legendre_hook(parity, 5).is_symmetric()


class TestSerialization:
    def test_rat_matrix_json(self):
        d = build_mass_1d(2).to_json_dict()
        assert d["dim"] == 2
        assert d["entries"] == ["2", "0", "0", "2/3"]

    def test_poly_matrix_json(self):
        d = build_parity_block(0, 1).to_json_dict()
        assert d["dim"] == 1
        assert d["entries"] == [["1", "-1/3"]]
