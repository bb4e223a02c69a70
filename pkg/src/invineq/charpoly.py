"""The characteristic polynomial family of the reduced eigenvalue problem,
its closed-form coefficients, the determinant prefactor constants, and the
guessed inverse-column vectors with their exact verification.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exact import Rational, pochhammer
from .matrices import build_parity_block
from .polynomial import RatPoly


@dataclass(frozen=True)
class CharPoly:
    """Characteristic polynomial for index n: monic of degree floor(n/2),
    with strictly alternating coefficient signs."""

    n: int
    nu: int
    poly: RatPoly

    def __call__(self, x: Rational | int) -> Fraction:
        return self.poly(x)


@dataclass(frozen=True)
class PrefactorConstant:
    """Constant prefactor of the parity-block determinant identity; equals
    the Cauchy-type determinant of the same parity."""

    ell: int
    n: int
    value: Fraction


@dataclass(frozen=True)
class InverseColumn:
    """Candidate last column of the inverse parity block, scaled so the
    matrix-vector product collapses to a single monic polynomial entry."""

    ell: int
    n: int
    entries: tuple[RatPoly, ...]


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of an exact identity check; failures carry the offending
    index and the exact residual polynomial."""

    ok: bool
    failures: tuple[tuple[int, RatPoly], ...] = ()


def char_coeff(j: int, n: int) -> Fraction:
    """Magnitude of the lambda^(nu-j) coefficient of the characteristic
    polynomial: (n-2j+1)_{4j} / (4^j (2j)!)."""
    if not 0 <= j <= n // 2:
        raise ValueError(f"need 0 <= j <= floor(n/2), got j={j}, n={n}")
    return pochhammer(n - 2 * j + 1, 4 * j) / (4**j * factorial(2 * j))


@lru_cache(maxsize=None)
def char_poly(n: int) -> CharPoly:
    """Monic characteristic polynomial of degree floor(n/2), built from the
    alternating closed-form coefficients."""
    if n < 0:
        raise ValueError("n must be >= 0")
    nu = n // 2
    coeffs = [Fraction(0)] * (nu + 1)
    for j in range(nu + 1):
        coeffs[nu - j] = (-1) ** j * char_coeff(j, n)
    poly = RatPoly(coeffs)
    assert poly.degree == nu and poly.leading == 1
    return CharPoly(n=n, nu=nu, poly=poly)


def char_poly_by_summation(n: int) -> CharPoly:
    """Independent construction of the same polynomial from the direct
    summation form sum_j (-4)^(j-nu) (2nu-2j+1)_n / (2j-2nu+n)! * x^j."""
    if n < 0:
        raise ValueError("n must be >= 0")
    nu = n // 2
    coeffs = []
    for j in range(nu + 1):
        c = (
            Fraction(-4) ** (j - nu)
            * pochhammer(2 * nu - 2 * j + 1, n)
            / factorial(2 * j - 2 * nu + n)
        )
        coeffs.append(c)
    poly = RatPoly(coeffs)
    assert poly.degree == nu and poly.leading == 1
    return CharPoly(n=n, nu=nu, poly=poly)


@lru_cache(maxsize=None)
def det_prefactor(ell: int, n: int) -> PrefactorConstant:
    """(1/2^n) prod_{i=1..n} ((i-1)!)^2 / (i - ell + 1/2)_n; strictly positive."""
    if ell not in (0, 1):
        raise ValueError("ell must be 0 or 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    value = Fraction(1, 2**n)
    for i in range(1, n + 1):
        value *= Fraction(factorial(i - 1)) ** 2 / pochhammer(Fraction(2 * i - 2 * ell + 1, 2), n)
    assert value > 0
    return PrefactorConstant(ell=ell, n=n, value=value)


def inverse_column(ell: int, n: int) -> InverseColumn:
    """Closed-form candidate for the (scaled) last inverse column of the
    parity block of size n.

    Terms whose inner factorial argument 2m+k-n-j+2 is negative contribute
    zero (reciprocal-of-factorial convention).
    """
    if ell not in (0, 1):
        raise ValueError("ell must be 0 or 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    entries = []
    for j in range(1, n + 1):
        if ell == 0:
            prefactor = (
                Fraction(2) ** (2 * n + 2 * j - 3)
                * pochhammer(Fraction(3, 2), 2 * n - 1)
                * pochhammer(Fraction(2 * n + 1, 2), j - 1)
                / (factorial(n - 1) * factorial(2 * j - 1))
            )
        else:
            prefactor = (
                Fraction(4) ** (j - n)
                * factorial(4 * n - 3)
                * pochhammer(Fraction(2 * n - 1, 2), j - 1)
                / (factorial(2 * n - 2) * factorial(n - 1) * factorial(2 * j - 2))
            )
        coeffs = [Fraction(0)] * n
        for m in range(n):
            total = Fraction(0)
            for k in range(2 * n - 2 * m - 1):
                arg = 2 * m + k - n - j + 2
                if arg < 0:
                    continue
                rising = pochhammer(2 * m + 1 if ell == 0 else 2 * m, 2 * k)
                if rising == 0:
                    continue
                total += (
                    Fraction((-1) ** (j + m))
                    * rising
                    / (Fraction(4) ** (m + k) * factorial(k) * factorial(arg))
                )
            coeffs[m] = total
        entries.append(prefactor * RatPoly(coeffs))
    return InverseColumn(ell=ell, n=n, entries=tuple(entries))


def verify_inverse_identity(ell: int, n: int) -> IdentityReport:
    """Check that the parity block times the candidate inverse column equals
    (0, ..., 0, q_n) exactly, with q_n the degree-n monic polynomial of the
    matching parity."""
    block = build_parity_block(ell, n)
    column = inverse_column(ell, n)
    if ell == 0:
        target = char_poly(2 * n).poly
    else:
        target = char_poly(2 * n - 1).poly.shift_up(1)
    failures = []
    for i in range(n):
        acc = RatPoly()
        for j in range(n):
            acc = acc + block.entries[i][j] * column.entries[j]
        expected = target if i == n - 1 else RatPoly()
        residual = acc - expected
        if not residual.is_zero():
            failures.append((i + 1, residual))
    return IdentityReport(ok=not failures, failures=tuple(failures))


def recurrence_residual(n: int) -> RatPoly:
    """Exact residual of the even-index second-order recurrence at index n:
    (4n+3) P_{2n+4} + (4n+5)(16n^2+40n-2x+21) P_{2n+2} + (4n+7) x^2 P_{2n}.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    p0 = char_poly(2 * n).poly
    p2 = char_poly(2 * n + 2).poly
    p4 = char_poly(2 * n + 4).poly
    middle = RatPoly((16 * n * n + 40 * n + 21, -2))
    return (
        (4 * n + 3) * p4
        + (4 * n + 5) * (middle * p2)
        + (4 * n + 7) * p0.shift_up(2)
    )


def verify_recurrence(n_max: int) -> IdentityReport:
    """Check the even-index recurrence as an exact polynomial identity for
    all 0 <= n <= n_max."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    failures = []
    for n in range(n_max + 1):
        residual = recurrence_residual(n)
        if not residual.is_zero():
            failures.append((n, residual))
    return IdentityReport(ok=not failures, failures=tuple(failures))
