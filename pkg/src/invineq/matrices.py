"""Exact construction of the matrix families behind the eigenvalue problems.

Builders produce either rational matrices (mass/stiffness Gram matrices and
their one-dimensional factors) or matrices of degree-<=1 polynomials in the
spectral variable (pencils, parity blocks, boundary matrices, hook matrices).
All entries come from closed-form integrals over (-1,1); nothing is computed
by quadrature.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exact import Rational
from .polynomial import RatPoly


@dataclass(frozen=True)
class RatMatrix:
    """Immutable square matrix of exact rationals."""

    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def is_symmetric(self) -> bool:
        n = self.dim
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i))

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "entries": [str(e) for row in self.entries for e in row],
        }


@dataclass(frozen=True)
class PolyMatrix:
    """Immutable square matrix of exact rational polynomials."""

    entries: tuple[tuple[RatPoly, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> RatPoly:
        i, j = ij
        return self.entries[i][j]

    def is_symmetric(self) -> bool:
        n = self.dim
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i))

    def max_entry_degree(self) -> int:
        return max((e.degree for row in self.entries for e in row), default=-1)

    def eval_at(self, x: Rational | int) -> RatMatrix:
        return RatMatrix(tuple(tuple(e(x) for e in row) for row in self.entries))

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "entries": [e.coeff_strings() for row in self.entries for e in row],
        }


def _rat_matrix(n: int, entry: Callable[[int, int], Fraction]) -> RatMatrix:
    """Build an n x n RatMatrix from a 1-based entry formula."""
    return RatMatrix(
        tuple(tuple(entry(i, j) for j in range(1, n + 1)) for i in range(1, n + 1))
    )


def _poly_matrix(n: int, entry: Callable[[int, int], RatPoly]) -> PolyMatrix:
    return PolyMatrix(
        tuple(tuple(entry(i, j) for j in range(1, n + 1)) for i in range(1, n + 1))
    )


def index_split(k: int, n: int) -> tuple[int, int]:
    """Split a 1-based tensor index 1..n*n into (chi, rho), both in 0..n-1.

    The round trip is k == chi*n + rho + 1.
    """
    if not 1 <= k <= n * n:
        raise ValueError(f"index {k} out of range 1..{n * n}")
    return (k - 1) // n, (k - 1) % n


def _even_integral(s: int) -> Fraction:
    """Integral of x**s over (-1, 1): 2/(s+1) for even s, else 0."""
    if s % 2:
        return Fraction(0)
    return Fraction(2, s + 1)


def build_mass(n: int) -> RatMatrix:
    """Gram matrix of the n*n monomial basis x^rho * t^chi under the L2 product."""
    if n < 1:
        raise ValueError("n must be >= 1")

    def entry(i: int, j: int) -> Fraction:
        chi_i, rho_i = index_split(i, n)
        chi_j, rho_j = index_split(j, n)
        return _even_integral(rho_i + rho_j) * _even_integral(chi_i + chi_j)

    return _rat_matrix(n * n, entry)


def build_stiffness(n: int) -> RatMatrix:
    """Gram matrix of the same basis under the x-derivative product.

    Entries with rho(i) + rho(j) <= 1 vanish (a constant factor in x is
    differentiated away), which also sidesteps the 0/0 in the closed form.
    """
    if n < 1:
        raise ValueError("n must be >= 1")

    def entry(i: int, j: int) -> Fraction:
        chi_i, rho_i = index_split(i, n)
        chi_j, rho_j = index_split(j, n)
        if rho_i + rho_j <= 1:
            return Fraction(0)
        return (
            rho_i * rho_j
            * _even_integral(rho_i + rho_j - 2)
            * _even_integral(chi_i + chi_j)
        )

    return _rat_matrix(n * n, entry)


def _mass_1d_entry(i: int, j: int) -> Fraction:
    # (1 - (-1)^(i+j-1)) / (i+j-1)
    if (i + j - 1) % 2 == 0:
        return Fraction(0)
    return Fraction(2, i + j - 1)


def _stiffness_1d_entry(i: int, j: int) -> Fraction:
    # (i-1)(j-1)(1 - (-1)^(i+j-3)) / (i+j-3); the parity factor is tested
    # first so the i+j == 3 case never divides by zero.
    if (i + j - 3) % 2 == 0:
        return Fraction(0)
    return Fraction(2 * (i - 1) * (j - 1), i + j - 3)


def build_mass_1d(n: int) -> RatMatrix:
    """One-dimensional mass factor: Gram matrix of 1, x, ..., x^(n-1) on (-1,1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _rat_matrix(n, _mass_1d_entry)


def build_stiffness_1d(n: int) -> RatMatrix:
    """One-dimensional stiffness factor: Gram matrix of the derivatives."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _rat_matrix(n, _stiffness_1d_entry)


def kronecker(x: RatMatrix, y: RatMatrix) -> RatMatrix:
    """Standard Kronecker product; dim(x) * dim(y)."""
    m = y.dim
    out = []
    for p in range(x.dim):
        for q in range(m):
            row = []
            for r in range(x.dim):
                xe = x.entries[p][r]
                row.extend(xe * ye for ye in y.entries[q])
            out.append(tuple(row))
    return RatMatrix(tuple(out))


def build_pencil(n: int) -> PolyMatrix:
    """The n x n pencil: 1D stiffness minus x times 1D mass, entrywise."""
    if n < 1:
        raise ValueError("n must be >= 1")

    def entry(i: int, j: int) -> RatPoly:
        return RatPoly((_stiffness_1d_entry(i, j), -_mass_1d_entry(i, j)))

    return _poly_matrix(n, entry)


def build_parity_block(parity: int, n: int) -> PolyMatrix:
    """Dimension-independent parity block of the pencil (after the even/odd
    permutation and removal of an entrywise factor 2).

    parity 0: (2i-1)(2j-1)/(2i+2j-3) - x/(2i+2j-1)
    parity 1: 4(i-1)(j-1)/(2i+2j-5) - x/(2i+2j-3)
    """
    if parity not in (0, 1):
        raise ValueError("parity must be 0 or 1")
    if n < 0:
        raise ValueError("n must be >= 0")

    if parity == 0:
        def entry(i: int, j: int) -> RatPoly:
            return RatPoly((
                Fraction((2 * i - 1) * (2 * j - 1), 2 * i + 2 * j - 3),
                Fraction(-1, 2 * i + 2 * j - 1),
            ))
    else:
        def entry(i: int, j: int) -> RatPoly:
            return RatPoly((
                Fraction(4 * (i - 1) * (j - 1), 2 * i + 2 * j - 5),
                Fraction(-1, 2 * i + 2 * j - 3),
            ))

    return _poly_matrix(n, entry)


def build_boundary(variant: str | int, n: int) -> PolyMatrix:
    """Boundary-trace matrices in the Legendre basis.

    variant "full": 1 + (-1)^(i+j) - delta_ij * 2x/(2i+1)
    variant 0:      2 - delta_ij * 2x/(4i+1)
    variant 1:      2 - delta_ij * 2x/(4i-1)
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if variant == "full":
        def entry(i: int, j: int) -> RatPoly:
            const = Fraction(1 + (-1) ** (i + j))
            if i == j:
                return RatPoly((const, Fraction(-2, 2 * i + 1)))
            return RatPoly((const,))
    elif variant == 0:
        def entry(i: int, j: int) -> RatPoly:
            if i == j:
                return RatPoly((2, Fraction(-2, 4 * i + 1)))
            return RatPoly((2,))
    elif variant == 1:
        def entry(i: int, j: int) -> RatPoly:
            if i == j:
                return RatPoly((2, Fraction(-2, 4 * i - 1)))
            return RatPoly((2,))
    else:
        raise ValueError("variant must be 'full', 0 or 1")

    return _poly_matrix(n, entry)


def build_legendre_hook(parity: int, n: int) -> PolyMatrix:
    """Legendre-basis hook matrices (constant along hooks, perturbed diagonal).

    With m = min(i, j):
    parity 0: 2m(2m+1) - delta_ij * 2x/(4i+1)
    parity 1: 2m(2m-1) - delta_ij * 2x/(4i-1)
    """
    if parity not in (0, 1):
        raise ValueError("parity must be 0 or 1")
    if n < 0:
        raise ValueError("n must be >= 0")

    def entry(i: int, j: int) -> RatPoly:
        m = min(i, j)
        const = Fraction(2 * m * (2 * m + 1) if parity == 0 else 2 * m * (2 * m - 1))
        if i == j:
            den = 4 * i + 1 if parity == 0 else 4 * i - 1
            return RatPoly((const, Fraction(-2, den)))
        return RatPoly((const,))

    return _poly_matrix(n, entry)


def parity_permutation(n: int) -> tuple[int, ...]:
    """0-based index map sending even-column-first order onto 1..n.

    perm[i] is the original (0-based) index placed at position i: original
    1-based columns 2, 4, 6, ... come first, then 1, 3, 5, ...
    """
    evens = list(range(1, n, 2))
    odds = list(range(0, n, 2))
    return tuple(evens + odds)


def split_parity_blocks(matrix: PolyMatrix) -> tuple[tuple[int, ...], PolyMatrix, PolyMatrix]:
    """Apply the parity permutation to rows and columns and cut out the two
    diagonal blocks.

    Returns (perm, top_left, bottom_right) where top_left is floor(n/2) wide
    and bottom_right is ceil(n/2) wide. The permutation is returned so callers
    can verify the block structure rather than trust it.
    """
    n = matrix.dim
    perm = parity_permutation(n)
    permuted = tuple(
        tuple(matrix.entries[perm[i]][perm[j]] for j in range(n)) for i in range(n)
    )
    half = n // 2
    top = PolyMatrix(tuple(row[:half] for row in permuted[:half]))
    bottom = PolyMatrix(tuple(row[half:] for row in permuted[half:]))
    return perm, top, bottom
