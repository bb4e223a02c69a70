"""Certified real-root machinery over exact rationals.

Polynomials are converted once to primitive integer coefficient lists; all
sign evaluations are pure integer arithmetic.  Root counting uses Sturm
sequences built as a primitive pseudo-remainder sequence (each element is a
positive rational multiple of the classical Sturm chain element, which
preserves sign variations while keeping coefficients integral).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .exact import Rational
from .polynomial import RatPoly

IntPoly = list[int]


class RootIsolationError(Exception):
    """Internal inconsistency while isolating roots (e.g. an impossible
    Sturm count); indicates a bug or a violated structural assumption."""


@dataclass(frozen=True)
class Enclosure:
    """Interval [lo, hi] certified to contain a specific real root."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("enclosure needs lo <= hi")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def __float__(self) -> float:
        return float(self.mid)

    def overlaps(self, other: "Enclosure") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi


def int_coeffs(poly: RatPoly) -> IntPoly:
    """Primitive integer coefficient list, a positive multiple of `poly`."""
    if poly.is_zero():
        return []
    denom = lcm(*(c.denominator for c in poly.coeffs))
    ints = [int(c * denom) for c in poly.coeffs]
    content = 0
    for c in ints:
        content = gcd(content, c)
    return [c // content for c in ints]


def sign_at(coeffs: IntPoly, x: Rational) -> int:
    """Sign of the polynomial at rational x, via integer Horner."""
    if not coeffs:
        return 0
    p, q = x.numerator, x.denominator
    acc = coeffs[-1]
    qpow = 1
    for c in reversed(coeffs[:-1]):
        qpow *= q
        acc = acc * p + c * qpow
    return (acc > 0) - (acc < 0)


def _prem(a: IntPoly, b: IntPoly) -> tuple[IntPoly, int]:
    """Pseudo-remainder over the integers.

    Returns (r, k) with r == lc(b)^k * rem(a, b); k is the number of
    reduction steps actually performed.
    """
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    steps = 0
    while r and len(r) - 1 >= db:
        lead = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for i, bc in enumerate(b):
            r[shift + i] -= lead * bc
        while r and r[-1] == 0:
            r.pop()
        steps += 1
    return r, steps


def _primitive(coeffs: IntPoly) -> IntPoly:
    content = 0
    for c in coeffs:
        content = gcd(content, c)
    if content == 0:
        return []
    return [c // content for c in coeffs]


def _exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact quotient a / b for integer polynomials with b | a over Q."""
    num = [Fraction(c) for c in a]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        q = num[i + len(b) - 1] / b[-1]
        out[i] = q
        if q:
            for j, bc in enumerate(b):
                num[i + j] -= q * bc
    if any(num[: len(b) - 1]):
        raise RootIsolationError("inexact polynomial division")
    denom = lcm(*(c.denominator for c in out))
    return [int(c * denom) for c in out]


def sturm_chain(coeffs: IntPoly) -> list[IntPoly]:
    """Sturm sequence of an integer polynomial.

    Each element is a positive multiple of the classical chain element
    p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i), so sign-variation counts
    are unchanged.  Inputs with repeated roots are replaced by their
    squarefree part (same distinct roots) before the chain is built.
    """
    if not coeffs:
        raise ValueError("zero polynomial has no Sturm chain")
    chain = [list(coeffs)]
    if len(coeffs) == 1:
        return chain
    deriv = [i * c for i, c in enumerate(coeffs)][1:]
    chain.append(_primitive(deriv))
    while len(chain[-1]) > 1:
        a, b = chain[-2], chain[-1]
        r, steps = _prem(a, b)
        if not r:
            # b divides a: the chain stalled on a nonconstant gcd, so the
            # input has a repeated root.  Restart on the squarefree part.
            return sturm_chain(_primitive(_exact_div(chain[0], chain[-1])))
        # r == lc(b)^steps * rem(a, b); flip so the stored element is a
        # positive multiple of -rem(a, b).
        if (b[-1] > 0) or (steps % 2 == 0):
            r = [-c for c in r]
        chain.append(_primitive(r))
    return chain


def _variations(signs: list[int]) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count


def variations_at(chain: list[IntPoly], x: Rational) -> int:
    return _variations([sign_at(p, x) for p in chain])


def count_roots(chain: list[IntPoly], lo: Rational, hi: Rational) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    if lo > hi:
        raise ValueError("need lo <= hi")
    if lo == hi:
        return 0
    return variations_at(chain, lo) - variations_at(chain, hi)


def refine(coeffs: IntPoly, lo: Fraction, hi: Fraction, tol: Fraction,
           chain: list[IntPoly] | None = None) -> Enclosure:
    """Shrink an isolating interval (lo, hi] for a single distinct root to
    width <= tol.

    Uses sign bisection when the endpoint signs straddle zero; otherwise
    (endpoint on another root, or even multiplicity) falls back to exact
    Sturm counting.
    """
    s_hi = sign_at(coeffs, hi)
    if s_hi == 0:
        return Enclosure(hi, hi)
    s_lo = sign_at(coeffs, lo)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        s_mid = sign_at(coeffs, mid)
        if s_mid == 0 and s_lo != 0 and s_lo != s_hi:
            return Enclosure(mid, mid)
        if s_lo != 0 and s_lo != s_hi:
            if s_mid == s_lo:
                lo, s_lo = mid, s_mid
            else:
                hi, s_hi = mid, s_mid
        else:
            if chain is None:
                chain = sturm_chain(coeffs)
            if count_roots(chain, mid, hi) >= 1:
                lo, s_lo = mid, s_mid
            else:
                if s_mid == 0:
                    return Enclosure(mid, mid)
                hi, s_hi = mid, s_mid
    return Enclosure(lo, hi)


def isolate_all(poly: RatPoly, lo: Fraction, hi: Fraction, tol: Fraction,
                expected: int | None = None) -> list[Enclosure]:
    """Isolate every real root in (lo, hi] and refine each to width <= tol.

    If `expected` is given, a mismatch with the Sturm count raises
    RootIsolationError rather than returning a partial answer.
    """
    coeffs = int_coeffs(poly)
    chain = sturm_chain(coeffs)
    total = count_roots(chain, lo, hi)
    if expected is not None and total != expected:
        raise RootIsolationError(
            f"found {total} roots in ({lo}, {hi}], expected {expected}"
        )
    isolated: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, total)]
    while stack:
        a, b, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            isolated.append((a, b))
            continue
        mid = (a + b) / 2
        k_right = count_roots(chain, mid, b)
        stack.append((a, mid, k - k_right))
        stack.append((mid, b, k_right))
    enclosures = [refine(coeffs, a, b, tol, chain) for a, b in isolated]
    enclosures.sort(key=lambda e: (e.lo, e.hi))
    return enclosures


def _extreme_root(poly: RatPoly, lo: Fraction, hi: Fraction, tol: Fraction,
                  rightmost: bool) -> Enclosure:
    coeffs = int_coeffs(poly)
    chain = sturm_chain(coeffs)
    if count_roots(chain, lo, hi) < 1:
        raise RootIsolationError(f"no roots in ({lo}, {hi}]")
    while True:
        k = count_roots(chain, lo, hi)
        if k == 1:
            break
        mid = (lo + hi) / 2
        k_right = count_roots(chain, mid, hi)
        if rightmost:
            if k_right >= 1:
                lo = mid
            else:
                hi = mid
        else:
            if k - k_right >= 1:
                hi = mid
            else:
                lo = mid
    return refine(coeffs, lo, hi, tol, chain)


def largest_root(poly: RatPoly, lo: Fraction, hi: Fraction, tol: Fraction) -> Enclosure:
    """Certified enclosure of the largest root in (lo, hi]."""
    return _extreme_root(poly, lo, hi, tol, rightmost=True)


def smallest_root(poly: RatPoly, lo: Fraction, hi: Fraction, tol: Fraction) -> Enclosure:
    """Certified enclosure of the smallest root in (lo, hi]."""
    return _extreme_root(poly, lo, hi, tol, rightmost=False)


def bisect_sign_change(coeffs: IntPoly, lo: Fraction, hi: Fraction,
                       tol: Fraction) -> Enclosure:
    """Certified enclosure from a strict sign change: requires sign(lo) < 0
    and sign(hi) >= 0, with sign(hi) == 0 collapsing to the exact root."""
    s_lo = sign_at(coeffs, lo)
    s_hi = sign_at(coeffs, hi)
    if s_lo == 0:
        return Enclosure(lo, lo)
    if s_hi == 0:
        return Enclosure(hi, hi)
    if s_lo == s_hi:
        raise RootIsolationError(f"no sign change on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        s_mid = sign_at(coeffs, mid)
        if s_mid == 0:
            return Enclosure(mid, mid)
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return Enclosure(lo, hi)


def interval_eval(poly: RatPoly, box: Enclosure) -> tuple[Fraction, Fraction]:
    """Rigorous range bounds of the polynomial over [box.lo, box.hi] by
    interval Horner with exact rational endpoints."""
    lo, hi = Fraction(0), Fraction(0)
    for c in reversed(poly.coeffs):
        candidates = (lo * box.lo, lo * box.hi, hi * box.lo, hi * box.hi)
        lo, hi = min(candidates) + c, max(candidates) + c
    return lo, hi


def root_offset_bounds(poly: RatPoly, enc: Enclosure,
                       t: Rational) -> tuple[Fraction, Fraction]:
    """Certified bounds on (root - t) for the single root inside `enc`.

    Mean-value form: root - t = -p(t)/p'(xi) with xi between them, valid
    while the derivative keeps one sign on the hull of `enc` and t.  The
    returned interval is far tighter than `enc` itself when t is close to
    the root, which makes tiny root-to-limit distances certifiable without
    deep bisection.
    """
    t = Fraction(t)
    hull = Enclosure(min(enc.lo, t), max(enc.hi, t))
    dlo, dhi = interval_eval(poly.derivative(), hull)
    if dlo <= 0 <= dhi:
        raise RootIsolationError("derivative sign not constant near the root")
    value = poly(t)
    a, b = -value / dlo, -value / dhi
    return (a, b) if a <= b else (b, a)
