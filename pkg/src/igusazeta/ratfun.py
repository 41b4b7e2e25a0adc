"""Exact rational functions in the formal variable t.

Values are kept in a canonical reduced form so that equality is structural:
numerator and denominator are integer polynomials, coprime over the
rationals, with no common integer factor between their contents, and the
lowest-degree nonzero coefficient of the denominator is positive.  That is
the form in which results like p/(p - t) or (p + t)/(p - t^2) print the way
they are usually written.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DivisionByZero, PoleAtZero
from .exactpoly import IntPoly, RatPoly, exact_divide, poly_gcd


def _as_int_poly(value) -> IntPoly:
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly((value,))
    if isinstance(value, (tuple, list)):
        return IntPoly(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as an integer polynomial")


class RationalFunction:
    """A reduced ratio of two integer polynomials in t."""

    __slots__ = ("num", "den")

    num: IntPoly
    den: IntPoly

    def __init__(self, num, den=1):
        num = _as_int_poly(num)
        den = _as_int_poly(den)
        if den.is_zero:
            raise DivisionByZero("zero denominator")
        if num.is_zero:
            num, den = IntPoly(), IntPoly((1,))
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = exact_divide(num, g)
                den = exact_divide(den, g)
            c = math.gcd(num.content(), den.content())
            if c > 1:
                num = IntPoly(x // c for x in num.coeffs)
                den = IntPoly(x // c for x in den.coeffs)
            low = next(x for x in den.coeffs if x != 0)
            if low < 0:
                num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def from_poly(cls, f) -> "RationalFunction":
        return cls(f, 1)

    @classmethod
    def from_rat_poly(cls, q: RatPoly) -> "RationalFunction":
        g, d = q.clear_denominators()
        return cls(g, d)

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls(1, 1)

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(0, 1)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({list(self.num.coeffs)!r}, {list(self.den.coeffs)!r})"

    def __add__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero:
            raise DivisionByZero("division by a rational function with zero numerator")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def scale(self, c: Fraction | int) -> "RationalFunction":
        """Multiply by an exact rational constant."""
        c = Fraction(c)
        return RationalFunction(self.num * c.numerator, self.den * c.denominator)

    def series(self, order: int) -> list[Fraction]:
        """Maclaurin coefficients c_0 .. c_order, by the linear recurrence
        c_j = (num_j - sum_{i>=1} den_i * c_{j-i}) / den_0.
        """
        if order < 0:
            raise ValueError("order must be nonnegative")
        den = self.den.coeffs
        if den[0] == 0:
            raise PoleAtZero("denominator vanishes at t = 0")
        num = self.num.coeffs
        dd = len(den) - 1
        out: list[Fraction] = []
        for j in range(order + 1):
            s = Fraction(num[j] if j < len(num) else 0)
            for i in range(1, min(j, dd) + 1):
                s -= den[i] * out[j - i]
            out.append(s / den[0])
        return out

    def to_text(self, var: str = "t") -> str:
        return f"({self.num.to_text(var)}) / ({self.den.to_text(var)})"

    def to_json_dict(self) -> dict:
        return {
            "num": [str(c) for c in self.num.coeffs],
            "den": [str(c) for c in self.den.coeffs],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "RationalFunction":
        return cls(
            [int(c) for c in data["num"]],
            [int(c) for c in data["den"]],
        )


def _coerce(value) -> RationalFunction | None:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, (IntPoly, int)):
        return RationalFunction(value, 1)
    return None
