"""Exact univariate polynomial arithmetic over the integers and rationals.

Polynomials are dense: index i of the coefficient sequence holds the
coefficient of x^i, the entry of highest index is nonzero, and the zero
polynomial stores no coefficients at all.  All arithmetic is exact; no
floating point is used anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import DegreeZero, ZeroPolynomial

NEG_INFINITY = float("-inf")


class IntPoly:
    """Dense univariate polynomial with arbitrary-precision integer coefficients.

    The degree of the zero polynomial is reported as ``NEG_INFINITY`` so that
    degree comparisons behave sensibly.  Instances are immutable and hashable;
    they may be shared freely between threads.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls([0] * degree + [coeff])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __add__(self, other) -> "IntPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "IntPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "IntPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "IntPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IntPoly()
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = IntPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, a: int) -> int:
        return evaluate(self, a)

    def content(self) -> int:
        """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Divide out the content and flip the sign so the leading coefficient is positive."""
        if self.is_zero:
            return self
        g = self.content()
        if self.coeffs[-1] < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    def to_text(self, var: str = "x") -> str:
        """Render in descending powers, e.g. ``2*x^2 + 3*x + 1``."""
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if not parts:
                sign = "-" if c < 0 else ""
            else:
                sign = " - " if c < 0 else " + "
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = var if i == 1 else f"{var}^{i}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append(sign + body)
        return "".join(parts)


def _coerce(value) -> IntPoly | None:
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly((value,))
    return None


class RatPoly:
    """Dense univariate polynomial with exact rational coefficients.

    Every stored coefficient is a ``Fraction`` (always in lowest terms with a
    positive denominator) and the trailing stored coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    @classmethod
    def from_int_poly(cls, f: IntPoly) -> "RatPoly":
        return cls(f.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("RatPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"RatPoly({[str(c) for c in self.coeffs]!r})"

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __mul__(self, other: "RatPoly") -> "RatPoly":
        if self.is_zero or other.is_zero:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ca in enumerate(self.coeffs):
            for j, cb in enumerate(other.coeffs):
                out[i + j] += ca * cb
        return RatPoly(out)

    def scale(self, c: Fraction | int) -> "RatPoly":
        c = Fraction(c)
        return RatPoly(ci * c for ci in self.coeffs)

    def evaluate(self, a: Fraction | int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def clear_denominators(self) -> tuple[IntPoly, int]:
        """Smallest positive D with D*self integral; returns (D*self, D)."""
        d = 1
        for c in self.coeffs:
            d = d * c.denominator // math.gcd(d, c.denominator)
        return IntPoly(int(c * d) for c in self.coeffs), d


def derivative(f: IntPoly) -> IntPoly:
    """Formal derivative."""
    return IntPoly(i * c for i, c in enumerate(f.coeffs) if i >= 1)


def evaluate(f: IntPoly, a: int) -> int:
    """Exact value f(a) by Horner's rule."""
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * a + c
    return acc


def compose_linear(f: IntPoly, a: int, b: int) -> IntPoly:
    """The polynomial f(a + b*x), expanded exactly."""
    u = IntPoly((a, b))
    acc = IntPoly()
    for c in reversed(f.coeffs):
        acc = acc * u + c
    return acc


def content_and_primitive(f: IntPoly, p: int) -> tuple[int, IntPoly]:
    """Split off the largest power of p dividing every coefficient.

    Returns (c, g) with f = p^c * g and g not identically zero mod p.
    """
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial has no p-content")
    c = None
    for coef in f.coeffs:
        if coef == 0:
            continue
        v = 0
        a = abs(coef)
        while a % p == 0:
            a //= p
            v += 1
        c = v if c is None else min(c, v)
        if c == 0:
            break
    assert c is not None
    if c == 0:
        return 0, f
    q = p**c
    return c, IntPoly(coef // q for coef in f.coeffs)


def _pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    # Remainder of lc(b)^j * a by b for some j >= 0; enough for a primitive PRS.
    db = b.degree
    lcb = b.leading_coefficient
    r = list(a.coeffs)
    while len(r) - 1 >= db and r:
        top = r[-1]
        shift = len(r) - 1 - db
        r = [lcb * c for c in r]
        for i, bc in enumerate(b.coeffs):
            r[shift + i] -= top * bc
        while r and r[-1] == 0:
            r.pop()
    return IntPoly(r)


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Gcd over the rationals, returned as a primitive integer polynomial
    with positive leading coefficient (a positive constant for coprime inputs).
    """
    if f.is_zero and g.is_zero:
        raise ZeroPolynomial("gcd of two zero polynomials is undefined")
    a, b = f.primitive(), g.primitive()
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = _pseudo_rem(a, b)
        a, b = b, r.primitive()
    return a


def exact_divide(f: IntPoly, g: IntPoly) -> IntPoly:
    """Quotient f / g when the division is exact over the integers."""
    if g.is_zero:
        raise ZeroPolynomial("division by the zero polynomial")
    if f.is_zero:
        return IntPoly()
    dq = f.degree - g.degree
    if dq < 0:
        raise ValueError("division is not exact")
    rem = list(f.coeffs)
    quo = [0] * (dq + 1)
    lcg = g.leading_coefficient
    for i in range(dq, -1, -1):
        c = rem[g.degree + i]
        if c % lcg:
            raise ValueError("division is not exact")
        q = c // lcg
        quo[i] = q
        if q:
            for j, gc in enumerate(g.coeffs):
                rem[i + j] -= q * gc
    if any(rem):
        raise ValueError("division is not exact")
    return IntPoly(quo)


def squarefree_part(f: IntPoly) -> IntPoly:
    """Primitive squarefree polynomial with the same distinct roots as f.

    Computed as f divided by gcd(f, f') over the rationals, then scaled to a
    primitive integer polynomial with positive leading coefficient.
    """
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial has no squarefree part")
    if f.degree == 0:
        raise DegreeZero("constants have no squarefree part")
    g = poly_gcd(f, derivative(f))
    if g.degree == 0:
        return f.primitive()
    return exact_divide(f.primitive(), g).primitive()


def _sylvester(f: IntPoly, g: IntPoly) -> list[list[int]]:
    # deg(f) shifted rows of g's coefficients above deg(g) shifted rows of f's.
    m, n = f.degree, g.degree
    size = m + n
    fdesc = list(reversed(f.coeffs))
    gdesc = list(reversed(g.coeffs))
    rows = []
    for i in range(m):
        rows.append([0] * i + gdesc + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + fdesc + [0] * (size - m - 1 - i))
    return rows


def _det_bareiss(matrix: list[list[int]]) -> int:
    # Fraction-free Gaussian elimination; every division below is exact.
    n = len(matrix)
    if n == 0:
        return 1
    m = [row[:] for row in matrix]
    sign = 1
    prev = 1
    for i in range(n - 1):
        pivot = next((j for j in range(i, n) if m[j][i] != 0), None)
        if pivot is None:
            return 0
        if pivot != i:
            m[i], m[pivot] = m[pivot], m[i]
            sign = -sign
        for j in range(i + 1, n):
            for k in range(i + 1, n):
                m[j][k] = (m[j][k] * m[i][i] - m[j][i] * m[i][k]) // prev
            m[j][i] = 0
        prev = m[i][i]
    return sign * m[-1][-1]


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Exact resultant of f and g, as the determinant of the Sylvester-style
    matrix whose first deg(f) rows carry g's coefficients and whose remaining
    deg(g) rows carry f's.  With this layout Res(x - a, x - b) = b - a.
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomial("resultant requires nonzero polynomials")
    return _det_bareiss(_sylvester(f, g))


def discriminant(h: IntPoly) -> int:
    """Discriminant under the convention D(h) = lc^(2m-1) * prod (r_i - r_j)^2.

    This equals lc(h) times the standard discriminant, and works out to
    (-1)^(m(m-1)/2) * Res(h, h') with no division.  A linear polynomial has
    discriminant 1 by convention.
    """
    if h.is_zero:
        raise ZeroPolynomial("the zero polynomial has no discriminant")
    m = h.degree
    if m == 0:
        raise DegreeZero("constants have no discriminant here")
    if m == 1:
        return 1
    sign = -1 if (m * (m - 1) // 2) % 2 else 1
    return sign * resultant(h, derivative(h))
