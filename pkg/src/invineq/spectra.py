"""Certified real-spectrum machinery: maximal eigenvalues with exact
enclosures, the quadratic/cubic truncation bounds and their orderings,
root tables, asymptotic diagnostics, and the boundary eigenvalue.

Every ordering reported here is backed by exact rational sign evidence;
floating point appears only in the optional dense-eigensolver cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .charpoly import char_coeff, char_poly
from .exact import Rational, cbrt_bounds, pi_bounds, sqrt_bounds
from .matrices import build_mass, build_stiffness
from .polynomial import RatPoly
from .roots import (
    Enclosure,
    RootIsolationError,
    bisect_sign_change,
    int_coeffs,
    interval_eval,
    isolate_all,
    largest_root,
    sign_at,
    smallest_root,
)

REFINEMENT_CAP = 256


@dataclass(frozen=True)
class QuadraticSurd:
    """Exact value u + sqrt(v) with rational u and v >= 0."""

    u: Fraction
    v: Fraction

    def __post_init__(self):
        if self.v < 0:
            raise ValueError("negative radicand")

    def compare(self, x: Rational) -> int:
        """Sign of (u + sqrt(v)) - x, decided exactly."""
        d = Fraction(x) - self.u
        if d < 0:
            return 1
        if d == 0:
            return 1 if self.v > 0 else 0
        if self.v > d * d:
            return 1
        if self.v == d * d:
            return 0
        return -1

    def bounds(self, tol: Rational) -> Enclosure:
        lo, hi = sqrt_bounds(self.v, tol)
        return Enclosure(self.u + lo, self.u + hi)

    def is_rational(self) -> bool:
        lo, hi = sqrt_bounds(self.v, Fraction(1, 2))
        return lo == hi

    def __float__(self) -> float:
        return float(self.bounds(Fraction(1, 10**17)).mid)


def surd_sign_of_poly(poly: RatPoly, surd: QuadraticSurd) -> int:
    """Exact sign of poly(u + sqrt(v)), via Horner in Q[sqrt(v)]."""
    a, b = Fraction(0), Fraction(0)  # value = a + b*sqrt(v)
    for c in reversed(poly.coeffs):
        a, b = a * surd.u + b * surd.v + c, a + b * surd.u
    if b == 0 or surd.v == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    # Opposite signs: compare a^2 against b^2 v.
    lhs, rhs = a * a, b * b * surd.v
    if a > 0:  # b < 0
        return (lhs > rhs) - (lhs < rhs)
    return (rhs > lhs) - (rhs < lhs)


def coefficient_dominance_holds(n: int) -> bool:
    """Exact check that (f1/2) * f_j > f_{j+1} for 1 <= j <= nu-1, the
    inequality behind every truncation bound used here."""
    nu = n // 2
    half_f1 = char_coeff(1, n) / 2
    return all(
        half_f1 * char_coeff(j, n) > char_coeff(j + 1, n) for j in range(1, nu)
    )


def _coeff_or_zero(j: int, n: int) -> Fraction:
    """Truncation coefficient, taken as 0 beyond the polynomial degree."""
    return char_coeff(j, n) if j <= n // 2 else Fraction(0)


def bound_lower(n: int) -> QuadraticSurd:
    """Lower bound on the maximal root from the quadratic truncation:
    f1/2 + sqrt(f1^2/4 - f2)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    f1 = char_coeff(1, n)
    v = f1 * f1 / 4 - _coeff_or_zero(2, n)
    assert v > 0
    return QuadraticSurd(u=f1 / 2, v=v)


def cubic_bound_poly(n: int) -> RatPoly:
    """Cubic truncation x^3 - f1 x^2 + f2 x - f3 whose largest real root is
    the upper bound on the maximal root."""
    if n < 2:
        raise ValueError("n must be >= 2")
    f1 = char_coeff(1, n)
    f2 = _coeff_or_zero(2, n)
    f3 = _coeff_or_zero(3, n)
    return RatPoly((-f3, f2, -f1, 1))


def bound_upper(n: int, tol: Rational = Fraction(1, 10**12)) -> Enclosure:
    """Certified enclosure of the cubic-truncation upper bound (the largest
    real root of cubic_bound_poly)."""
    cubic = cubic_bound_poly(n)
    f1 = char_coeff(1, n)
    coeffs = int_coeffs(cubic)
    if sign_at(coeffs, f1) == 0:
        return Enclosure(f1, f1)
    return largest_root(cubic, Fraction(0), f1, Fraction(tol))


_P1_NUM = RatPoly((16200, -5130, -4733, 796, 404, 10, 8, 4, 1))
_P2_FACTOR = RatPoly((116640000, -44971200, -40140000, 9619080, 4705644,
                      -113090, -20619, 10198, -2951, -3590, -641, 42, 7))


def _radical_p1(n: int) -> Fraction:
    return _P1_NUM(n) / 4320


def _radical_p2(n: int) -> Fraction:
    quartic = Fraction((n - 3) * (n - 2) * (n + 3) * (n + 4))
    return quartic * _P2_FACTOR(n) / 597196800


def bound_upper_radical(n: int, tol: Rational = Fraction(1, 10**12)) -> Enclosure:
    """The literal radical form of the cubic upper bound,
    f1/3 + cbrt(f1 (p1 + sqrt(p2))) + cbrt(f1 (p1 - sqrt(p2))),
    as a certified enclosure.  Only meaningful where p2 >= 0."""
    if n < 2:
        raise ValueError("n must be >= 2")
    tol = Fraction(tol)
    f1 = char_coeff(1, n)
    p1, p2 = _radical_p1(n), _radical_p2(n)
    if p2 < 0:
        raise ValueError("negative discriminant: radical form is complex")
    # Budget: sqrt error enters the cbrt arguments; cube roots contract, so
    # a generous inner tolerance still meets tol after summation.
    inner = tol / 8
    s_lo, s_hi = sqrt_bounds(p2, inner)
    lo1, _ = cbrt_bounds(f1 * (p1 + s_lo), inner)
    _, hi1 = cbrt_bounds(f1 * (p1 + s_hi), inner)
    lo2, _ = cbrt_bounds(f1 * (p1 - s_hi), inner)
    _, hi2 = cbrt_bounds(f1 * (p1 - s_lo), inner)
    return Enclosure(f1 / 3 + lo1 + lo2, f1 / 3 + hi1 + hi2)


def _assert_alternating(n: int) -> None:
    poly = char_poly(n).poly
    nu = poly.degree
    for j in range(nu + 1):
        c = poly.coeff(nu - j)
        if (-1) ** j * c <= 0:
            raise RootIsolationError(f"coefficient alternation fails at n={n}")


@lru_cache(maxsize=None)
def _max_root_cached(n: int, tol: Fraction) -> Enclosure:
    cp = char_poly(n)
    f1 = char_coeff(1, n)
    _assert_alternating(n)
    coeffs = int_coeffs(cp.poly)
    # The maximal root lies in (f1/2, f1]; there is at most one root above
    # f1/2 (the roots are real and positive and sum to f1), so a sign-change
    # bracket there pins it down.
    if sign_at(coeffs, f1) == 0:
        return Enclosure(f1, f1)
    surd = bound_lower(n)
    lo_sqrt, _ = sqrt_bounds(surd.v, Fraction(1, 4))
    a0 = surd.u + lo_sqrt
    s_a0 = sign_at(coeffs, a0)
    if s_a0 == 0:
        return Enclosure(a0, a0)
    if s_a0 > 0:
        raise RootIsolationError(
            f"bracket sign check failed at n={n}: expected negative value"
        )
    return bisect_sign_change(coeffs, a0, f1, tol)


def max_root(n: int, tol: Rational = Fraction(1, 10**12)) -> Enclosure:
    """Certified enclosure of width <= tol for the maximal root of the
    characteristic polynomial of index n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be > 0")
    return _max_root_cached(n, tol)


def refine_max_root(n: int, enc: Enclosure, extra_steps: int) -> Enclosure:
    """Continue bisecting a maximal-root enclosure for up to `extra_steps`."""
    if enc.is_exact or extra_steps <= 0:
        return enc
    coeffs = int_coeffs(char_poly(n).poly)
    width_target = enc.width / 2**extra_steps
    return bisect_sign_change(coeffs, enc.lo, enc.hi, width_target)


@dataclass(frozen=True)
class RootTable:
    """All real roots of the characteristic polynomial of index n, sorted
    ascending, with certified enclosures."""

    n: int
    roots: tuple[Enclosure, ...]

    @property
    def count(self) -> int:
        return len(self.roots)


def all_roots(n: int, tol: Rational = Fraction(1, 10**9)) -> RootTable:
    """Isolate all floor(n/2) roots by Sturm counting and refine to tol.

    A count different from floor(n/2) raises RootIsolationError (it would
    contradict the real-rootedness forced by the symmetric origin).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    tol = Fraction(tol)
    nu = n // 2
    poly = char_poly(n).poly
    f1 = char_coeff(1, n)
    enclosures = isolate_all(poly, Fraction(0), f1, tol, expected=nu)
    if enclosures and enclosures[0].lo < 0:
        raise RootIsolationError("nonpositive root enclosure")
    return RootTable(n=n, roots=tuple(enclosures))


@lru_cache(maxsize=None)
def smallest_root_of_index(n: int, tol: Fraction = Fraction(1, 10**9)) -> Enclosure:
    """Certified enclosure of the smallest root of the characteristic
    polynomial of index n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    poly = char_poly(n).poly
    f1 = char_coeff(1, n)
    return smallest_root(poly, Fraction(0), f1, tol)


@dataclass(frozen=True)
class OrderingFlags:
    """Exactly certified orderings between the maximal root and its bounds."""

    m_le_lambda: bool
    lambda_le_f1: bool
    lambda_le_upper: bool
    m_strict: bool
    f1_strict: bool
    upper_strict: bool
    upper_equal: bool
    decided: bool

    @property
    def all_hold(self) -> bool:
        return self.m_le_lambda and self.lambda_le_f1 and self.lambda_le_upper


@dataclass(frozen=True)
class BoundReport:
    """Per-n record of the lower bound, maximal root, and upper bounds."""

    n: int
    m: QuadraticSurd
    m_enclosure: Enclosure
    f1: Fraction
    upper_enclosure: Enclosure
    lam: Enclosure
    orderings: OrderingFlags


def _cubic_is_shifted_charpoly(n: int) -> bool:
    """True when the cubic truncation equals x^(3-nu) times the full
    characteristic polynomial, i.e. both share the same maximal root."""
    nu = n // 2
    if nu > 3:
        return False
    return cubic_bound_poly(n) == char_poly(n).poly.shift_up(3 - nu)


def bound_report(n: int, tol: Rational = Fraction(1, 10**12)) -> BoundReport:
    """Certify the ordering m(n) <= lambda_n <= f1(n) and lambda_n <= M(n),
    with exact strictness decisions."""
    if n < 2:
        raise ValueError("n must be >= 2")
    tol = Fraction(tol)
    cp = char_poly(n)
    f1 = char_coeff(1, n)
    lam = max_root(n, tol)
    surd = bound_lower(n)
    m_enc = surd.bounds(tol)
    upper = bound_upper(n, tol)

    # Lower bound: exact sign of the polynomial at u + sqrt(v).
    s_at_m = surd_sign_of_poly(cp.poly, surd)
    m_le = s_at_m <= 0
    m_strict = s_at_m < 0

    # f1: exact endpoint evaluation, with strictness from dominance.
    val_f1 = cp.poly(f1)
    f1_le = val_f1 >= 0
    f1_strict = val_f1 > 0 and coefficient_dominance_holds(n)

    # Cubic upper bound: structural equality for small n, disjoint
    # enclosures otherwise.
    decided = True
    if _cubic_is_shifted_charpoly(n):
        upper_le, upper_strict, upper_eq = True, False, True
    else:
        cubic = cubic_bound_poly(n)
        steps = 0
        while lam.hi >= upper.lo and steps < REFINEMENT_CAP:
            lam = refine_max_root(n, lam, 8)
            if not upper.is_exact:
                upper = largest_root(cubic, upper.lo, upper.hi, upper.width / 2**8)
            steps += 8
        if lam.hi < upper.lo:
            upper_le, upper_strict, upper_eq = True, True, False
        else:
            upper_le, upper_strict, upper_eq = False, False, False
            decided = False

    return BoundReport(
        n=n,
        m=surd,
        m_enclosure=m_enc,
        f1=f1,
        upper_enclosure=upper,
        lam=lam,
        orderings=OrderingFlags(
            m_le_lambda=m_le,
            lambda_le_f1=f1_le,
            lambda_le_upper=upper_le,
            m_strict=m_strict,
            f1_strict=f1_strict,
            upper_strict=upper_strict,
            upper_equal=upper_eq,
            decided=decided,
        ),
    )


@dataclass(frozen=True)
class MonotoneReport:
    ok: bool
    checked: int
    undecided: tuple[int, ...]


def ensure_disjoint(a: Enclosure, b: Enclosure,
                    refine_a: Callable[[Enclosure], Enclosure],
                    refine_b: Callable[[Enclosure], Enclosure],
                    cap: int = REFINEMENT_CAP) -> bool | None:
    """Refine until a < b strictly (True), b < a (False), or the cap is hit
    with the enclosures still overlapping (None, never silently ordered)."""
    steps = 0
    while True:
        if a.hi < b.lo:
            return True
        if b.hi < a.lo:
            return False
        if steps >= cap:
            return None
        na, nb = refine_a(a), refine_b(b)
        if na == a and nb == b:
            return None
        a, b = na, nb
        steps += 1


def check_monotone(n_max: int, tol: Rational = Fraction(1, 10**12)) -> MonotoneReport:
    """Certify that the maximal roots strictly increase for 2 <= n < n_max."""
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    undecided = []
    ok = True
    prev = max_root(2, tol)
    for n in range(3, n_max + 1):
        cur = max_root(n, tol)
        verdict = ensure_disjoint(
            prev, cur,
            lambda e, n=n - 1: refine_max_root(n, e, 8),
            lambda e, n=n: refine_max_root(n, e, 8),
        )
        if verdict is None:
            undecided.append(n)
        elif verdict is False:
            ok = False
        prev = cur
    return MonotoneReport(ok=ok and not undecided, checked=n_max - 2,
                          undecided=tuple(undecided))


def comparison_check(n: int, tol: Rational = Fraction(1, 10**12)) -> bool | None:
    """Certify that the next-index characteristic polynomial is strictly
    negative at the maximal root of index n.  Returns None if undecided at
    the refinement cap, False if provably violated."""
    if n < 2:
        raise ValueError("n must be >= 2")
    nxt = char_poly(n + 1).poly
    enc = max_root(n, Fraction(tol))
    for _ in range(8):
        lo, hi = interval_eval(nxt, enc)
        if hi < 0:
            return True
        if lo > 0:
            return False
        if enc.is_exact:
            # Exact root: the interval evaluation is an exact value.
            return hi < 0
        enc = refine_max_root(n, enc, 16)
    return None


@dataclass(frozen=True)
class InverseConstantReport:
    """The inverse-inequality constant sqrt(lambda_n) and its window."""

    n: int
    value: Enclosure
    window_low_holds: bool
    window_high_holds: bool


def inverse_constant(n: int, tol: Rational = Fraction(1, 10**12)) -> InverseConstantReport:
    """Certified enclosure of sqrt(lambda_n) plus the exact sandwich
    f1/2 <= lambda_n <= f1 (equivalently the quarter-power window on the
    constant itself)."""
    tol = Fraction(tol)
    lam = max_root(n, tol)
    lo = sqrt_bounds(lam.lo, tol / 4)[0]
    hi = sqrt_bounds(lam.hi, tol / 4)[1]
    f1 = char_coeff(1, n)
    cp = char_poly(n)
    surd = bound_lower(n)
    # lambda_n >= m(n) > f1/2, certified by the exact surd sign; the upper
    # edge is the exact endpoint evaluation.
    low_ok = surd_sign_of_poly(cp.poly, surd) <= 0 and surd.compare(f1 / 2) > 0
    high_ok = cp.poly(f1) >= 0 and (cp.poly(f1) == 0 or coefficient_dominance_holds(n))
    return InverseConstantReport(
        n=n, value=Enclosure(lo, hi),
        window_low_holds=low_ok, window_high_holds=high_ok,
    )


def max_boundary_eigenvalue(n: int) -> Fraction:
    """Largest boundary-trace eigenvalue: n(n+3)/2, plus 1 when n is odd."""
    if n < 1:
        raise ValueError("n must be >= 1")
    value = Fraction(n * (n + 3), 2)
    return value + 1 if n % 2 else value


def boundary_factor_roots(n: int) -> tuple[Fraction, ...]:
    """Roots of the verified boundary determinant factorization: zero (for
    n >= 3) and the two rational linear factors."""
    if n < 1:
        raise ValueError("n must be >= 1")
    half_lo, half_hi = n // 2, (n + 1) // 2
    roots = {Fraction(2 * half_lo * half_lo + 3 * half_lo),
             Fraction(2 * half_hi * half_hi + half_hi)}
    if n >= 3:
        roots.add(Fraction(0))
    if n in (1, 2):
        roots.discard(Fraction(0))
    return tuple(sorted(roots))


@dataclass(frozen=True)
class AsymptoticRow:
    """Diagnostics row comparing exact quantities against their limits."""

    n: int
    lambda_over_n4: Fraction
    lambda_over_f1: Fraction
    smallest_root_even: Fraction
    smallest_root_odd: Fraction
    targets: dict[str, Fraction]


def asymptotic_targets(tol: Rational = Fraction(1, 10**30)) -> dict[str, Fraction]:
    pi_lo, pi_hi = pi_bounds(Fraction(tol))
    pi_mid = (pi_lo + pi_hi) / 2
    pi_sq = pi_mid * pi_mid
    return {
        "inv_pi_sq": 1 / pi_sq,
        "eight_inv_pi_sq": 8 / pi_sq,
        "quarter_pi_sq": pi_sq / 4,
        "pi_sq": pi_sq,
    }


def asymptotic_table(ns: Sequence[int], tol: Rational = Fraction(1, 10**12)) -> list[AsymptoticRow]:
    """Rows of limit diagnostics for each requested n."""
    tol = Fraction(tol)
    targets = asymptotic_targets()
    rows = []
    for n in ns:
        if n < 2:
            raise ValueError("each n must be >= 2")
        lam = max_root(n, tol).mid
        f1 = char_coeff(1, n)
        even_index = 2 * (n // 2)
        rows.append(
            AsymptoticRow(
                n=n,
                lambda_over_n4=lam / n**4,
                lambda_over_f1=lam / f1,
                smallest_root_even=smallest_root_of_index(even_index).mid,
                smallest_root_odd=smallest_root_of_index(even_index + 1).mid,
                targets=targets,
            )
        )
    return rows


@dataclass(frozen=True)
class FloatCrossReport:
    n: int
    float_value: float
    certified_value: float
    difference: float
    tol: float
    ok: bool
    inconclusive: bool


def float_eigen_crosscheck(n: int, tol: float) -> FloatCrossReport:
    """Largest generalized eigenvalue of (stiffness, mass) from a dense
    floating-point solver against the certified maximal root.

    Restricted to 2 <= n <= 4: the monomial mass matrices are too
    ill-conditioned beyond that.  Solver failure is reported as
    inconclusive, never as a hard failure.
    """
    if not 2 <= n <= 4:
        raise ValueError("n must be in 2..4")
    import numpy as np
    from scipy.linalg import eigh

    mass = np.array([[float(e) for e in row] for row in build_mass(n).entries])
    stiff = np.array([[float(e) for e in row] for row in build_stiffness(n).entries])
    certified = float(max_root(n, Fraction(1, 10**14)).mid)
    try:
        eigenvalues = eigh(stiff, mass, eigvals_only=True)
    except Exception:
        return FloatCrossReport(n=n, float_value=float("nan"),
                                certified_value=certified,
                                difference=float("nan"), tol=tol,
                                ok=False, inconclusive=True)
    top = float(eigenvalues[-1])
    diff = abs(top - certified)
    return FloatCrossReport(n=n, float_value=top, certified_value=certified,
                            difference=diff, tol=tol, ok=diff <= tol,
                            inconclusive=False)
