"""Dense univariate polynomials over exact rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exact import Rational


class RatPoly:
    """Immutable dense polynomial; coefficient i multiplies x**i.

    Trailing zeros are trimmed on construction, so the zero polynomial has
    an empty coefficient tuple and degree -1. All ring operations are exact.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Rational | int] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls) -> "RatPoly":
        return cls()

    @classmethod
    def one(cls) -> "RatPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "RatPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, power: int, coeff: Rational | int = 1) -> "RatPoly":
        if power < 0:
            raise ValueError("power must be >= 0")
        return cls((0,) * power + (coeff,))

    @classmethod
    def constant(cls, c: Rational | int) -> "RatPoly":
        return cls((c,))

    # -- basic queries ---------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    # -- ring operations -------------------------------------------------------

    def __add__(self, other: "RatPoly | Rational | int") -> "RatPoly":
        other = _as_poly(other)
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self._coeffs))

    def __sub__(self, other: "RatPoly | Rational | int") -> "RatPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: "RatPoly | Rational | int") -> "RatPoly":
        return _as_poly(other) + (-self)

    def __mul__(self, other: "RatPoly | Rational | int") -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RatPoly()
            return RatPoly(tuple(c * other for c in self._coeffs))
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return RatPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RatPoly":
        if k < 0:
            raise ValueError("negative power")
        result = RatPoly.one()
        for _ in range(k):
            result = result * self
        return result

    def shift_up(self, k: int) -> "RatPoly":
        """Multiply by x**k."""
        if k < 0:
            raise ValueError("shift must be >= 0")
        if not self._coeffs:
            return self
        return RatPoly((Fraction(0),) * k + self._coeffs)

    def derivative(self) -> "RatPoly":
        return RatPoly(tuple(i * c for i, c in enumerate(self._coeffs) if i > 0))

    # -- evaluation ------------------------------------------------------------

    def __call__(self, x: Rational | int) -> Fraction:
        """Exact Horner evaluation."""
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    # -- comparison / hashing / display ----------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = _as_poly(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"RatPoly({list(self._coeffs)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if i == 0:
                term = f"{mag}"
            elif i == 1:
                term = "x" if mag == 1 else f"{mag}*x"
            else:
                term = f"x^{i}" if mag == 1 else f"{mag}*x^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def coeff_strings(self) -> list[str]:
        """Coefficients as exact 'p/q' strings, ascending powers."""
        return [str(c) for c in self._coeffs]


def _as_poly(v: RatPoly | Rational | int) -> RatPoly:
    if isinstance(v, RatPoly):
        return v
    return RatPoly((v,))


def poly_eval(p: RatPoly, x: Rational | int) -> Fraction:
    """Exact value p(x)."""
    return p(x)


def poly_interpolate(points: Sequence[tuple[Rational | int, Rational | int]]) -> RatPoly:
    """Unique polynomial of degree < len(points) through the given points.

    Exact Newton divided differences; duplicate abscissae are a caller bug.
    """
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissa in interpolation data")
    if not points:
        return RatPoly()
    # Divided-difference table, computed in place.
    dd = list(ys)
    for level in range(1, len(xs)):
        for i in range(len(xs) - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    # Horner-style expansion of the Newton form.
    result = RatPoly((dd[-1],))
    for i in range(len(xs) - 2, -1, -1):
        result = result * RatPoly((-xs[i], 1)) + dd[i]
    return result
