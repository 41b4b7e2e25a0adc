"""Main pipeline: branch parameters, closed-form root counts, Poincare series,
and the Igusa local zeta function of an integer univariate polynomial at a prime.

The computation never factors anything over the p-adic integers.  Each p-adic
root branch of f is observed indirectly, through the lengths of its
representative roots at a window of precisions beyond the stability threshold;
the multiplicity and value valuation of the branch are read off from how fast
those lengths grow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InconsistentLengths, RegimeViolation, ZeroPolynomial
from .exactpoly import (
    IntPoly,
    RatPoly,
    content_and_primitive,
    discriminant,
    squarefree_part,
)
from .padic import count_roots, representative_roots, valuation
from .ratfun import RationalFunction


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class BranchParams:
    """Parameters of one p-adic root branch of f.

    multiplicity: multiplicity of the branch's p-adic root.
    valuation: p-adic valuation of the branch-free part of f at the root.
    k_align: least precision >= the stability threshold at which
        (k_align - valuation) is divisible by multiplicity.
    prefix: digit string identifying the branch at the stability threshold.
    """

    multiplicity: int
    valuation: int
    k_align: int
    prefix: tuple[int, ...]

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")
        if self.valuation < 0:
            raise ValueError("valuation must be nonnegative")
        if (self.k_align - self.valuation) % self.multiplicity:
            raise ValueError("k_align is not aligned with the branch parameters")

    def prefix_length(self, k: int) -> int:
        """Length of the branch's representative root at precision k."""
        return _ceil_div(k - self.valuation, self.multiplicity)

    def to_json_dict(self) -> dict:
        return {
            "e": self.multiplicity,
            "nu": self.valuation,
            "k_align": self.k_align,
            "prefix": [str(d) for d in self.prefix],
        }


def discriminant_valuation(f: IntPoly, p: int) -> int:
    """p-adic valuation of the discriminant of the squarefree part of f.

    Finite for every nonzero f of degree >= 1, since the squarefree part has
    nonzero discriminant.  Assumes f is not identically zero mod p.
    """
    d = discriminant(squarefree_part(f))
    v = valuation(d, p)
    assert v != float("inf")
    return int(v)


def stability_threshold(f: IntPoly, p: int) -> int:
    """The precision deg(f) * (delta + 1) + 1 beyond which the root counts of
    f mod p^k follow the closed form, where delta is the discriminant
    valuation of the squarefree part.
    """
    return f.degree * (discriminant_valuation(f, p) + 1) + 1


def extract_branches(f: IntPoly, p: int) -> list[BranchParams]:
    """Branch parameters of every p-adic root branch of f.

    Requires f content-stripped (not identically zero mod p) of degree >= 1.
    """
    return _extract_branches(f, p, stability_threshold(f, p))


def _extract_branches(g: IntPoly, p: int, k0: int) -> list[BranchParams]:
    d = g.degree
    window = list(range(k0, k0 + 2 * d + 2))
    reps = {k: representative_roots(g, p, k) for k in window}
    n = len(reps[k0])
    for k in window:
        if len(reps[k]) != n:
            raise InconsistentLengths(
                f"branch count changed from {n} to {len(reps[k])} at precision {k}"
            )
    branches = []
    for base in reps[k0]:
        prefix = base.digits
        lengths: dict[int, int] = {}
        for k in window:
            hits = [r for r in reps[k] if r.digits[: len(prefix)] == prefix]
            if len(hits) != 1:
                raise InconsistentLengths(
                    f"prefix {prefix} matched {len(hits)} roots at precision {k}"
                )
            lengths[k] = hits[0].length
        steps = []
        for k in window[1:]:
            jump = lengths[k] - lengths[k - 1]
            if jump not in (0, 1):
                raise InconsistentLengths(f"length jumped by {jump} at precision {k}")
            if jump == 1:
                steps.append(k)
        if len(steps) < 2:
            raise InconsistentLengths("fewer than two length increments in the window")
        e = steps[1] - steps[0]
        if any(b - a != e for a, b in zip(steps, steps[1:])):
            raise InconsistentLengths("length increments are not equally spaced")
        aligned = steps[1] - 1
        nu = aligned - e * lengths[aligned]
        if nu < 0:
            raise InconsistentLengths("negative branch valuation")
        for k in window:
            if lengths[k] != _ceil_div(k - nu, e):
                raise InconsistentLengths(
                    f"length {lengths[k]} at precision {k} violates the ceiling law"
                )
        k_align = k0 + ((nu - k0) % e)
        branches.append(
            BranchParams(multiplicity=e, valuation=nu, k_align=k_align, prefix=prefix)
        )
    if sum(b.multiplicity for b in branches) > d:
        raise InconsistentLengths("total branch multiplicity exceeds the degree")
    return branches


def closed_form_count(
    branches: list[BranchParams] | tuple[BranchParams, ...], p: int, k: int, k0: int
) -> int:
    """Exact root count mod p^k from branch parameters, valid for k >= k0.

    With no branches the count is 0.
    """
    if k < k0:
        raise RegimeViolation(f"precision {k} is below the stable threshold {k0}")
    return sum(p ** (k - b.prefix_length(k)) for b in branches)


def root_count(f: IntPoly, p: int, k: int) -> int:
    """Root count of f mod p^k for any nonzero f, stripping p-power content.

    With f = p^c * g and g not identically zero mod p, the count is p^k for
    k <= c and p^c times the count of g mod p^(k-c) beyond.
    """
    if f.is_zero:
        raise ZeroPolynomial("root counts of the zero polynomial are not defined")
    c, g = content_and_primitive(f, p)
    if k <= c:
        return p**k
    return p**c * count_roots(g, p, k - c)


@dataclass(frozen=True)
class _Pipeline:
    content_shift: int
    primitive: IntPoly
    disc_valuation: int | None
    stable_precision: int | None
    branches: tuple[BranchParams, ...]


def _run_pipeline(f: IntPoly, p: int) -> _Pipeline:
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial has no Poincare series")
    c, g = content_and_primitive(f, p)
    if g.degree == 0:
        return _Pipeline(c, g, None, None, ())
    delta = discriminant_valuation(g, p)
    k0 = g.degree * (delta + 1) + 1
    branches = tuple(_extract_branches(g, p, k0))
    return _Pipeline(c, g, delta, k0, branches)


def _assemble_poincare(p: int, pipe: _Pipeline) -> RationalFunction:
    if pipe.primitive.degree == 0:
        pg = RationalFunction.one()
    else:
        k0 = pipe.stable_precision
        acc: dict[int, Fraction] = {0: Fraction(1)}
        for j in range(1, k0):
            acc[j] = Fraction(count_roots(pipe.primitive, p, j), p**j)
        for b in pipe.branches:
            for l in range(k0, b.k_align):
                n_l = p ** (l - b.prefix_length(l))
                acc[l] = acc.get(l, Fraction(0)) + Fraction(n_l, p**l)
        top = max(acc)
        head = RatPoly([acc.get(j, Fraction(0)) for j in range(top + 1)])
        pg = RationalFunction.from_rat_poly(head)
        for b in pipe.branches:
            e = b.multiplicity
            num_low = [0] * (e + 1)
            num_low[0] += p
            num_low[1] -= p - 1
            num_low[e] -= 1
            num = IntPoly([0] * b.k_align + num_low[:])
            scale = p ** ((b.k_align - b.valuation) // e)
            den = (
                IntPoly((scale,))
                * IntPoly((1, -1))
                * IntPoly([p] + [0] * (e - 1) + [-1])
            )
            pg = pg + RationalFunction(num, den)
    c = pipe.content_shift
    if c == 0:
        return pg
    head = RationalFunction(IntPoly([1] * c))
    return head + RationalFunction(IntPoly.monomial(c)) * pg


def poincare_series(f: IntPoly, p: int) -> RationalFunction:
    """The Poincare series of f at p: the generating function whose k-th
    Maclaurin coefficient is N_k / p^k, where N_k counts roots of f mod p^k.
    The result is an exact reduced rational function of t.
    """
    return _assemble_poincare(p, _run_pipeline(f, p))


def zeta_function(f: IntPoly, p: int) -> RationalFunction:
    """The Igusa local zeta function of f at p, as a rational function of
    t = p^(-s), recovered from the Poincare series P via
    Z = (1 - (1 - t) * P) / t.  The division by t is exact because P(0) = 1.
    """
    return _zeta_from_poincare(poincare_series(f, p))


def _zeta_from_poincare(p_series: RationalFunction) -> RationalFunction:
    one = RationalFunction.one()
    t = RationalFunction(IntPoly((0, 1)))
    return (one - (one - t) * p_series) / t


@dataclass(frozen=True)
class ZetaReport:
    """Aggregate result of the full pipeline for one (f, p) input."""

    poly: IntPoly
    prime: int
    content_shift: int
    disc_valuation: int | None
    stable_precision: int | None
    branches: tuple[BranchParams, ...]
    poincare: RationalFunction
    zeta: RationalFunction

    @property
    def n(self) -> int:
        """Number of p-adic root branches."""
        return len(self.branches)

    @property
    def numerator_degree(self) -> int | float:
        return self.poincare.num.degree

    @property
    def denominator_degree(self) -> int | float:
        return self.poincare.den.degree

    def to_json_dict(self) -> dict:
        return {
            "poly": self.poly.to_text(),
            "prime": str(self.prime),
            "delta": self.disc_valuation,
            "k0": self.stable_precision,
            "n": self.n,
            "content_shift": self.content_shift,
            "branches": [b.to_json_dict() for b in self.branches],
            "poincare": self.poincare.to_json_dict(),
            "zeta": self.zeta.to_json_dict(),
        }

    def describe(self) -> str:
        lines = [
            f"polynomial: {self.poly.to_text()}",
            f"prime: {self.prime}",
            f"content shift: {self.content_shift}",
            f"discriminant valuation: {self.disc_valuation}",
            f"stable precision: {self.stable_precision}",
            f"branches: {self.n}",
        ]
        for b in self.branches:
            prefix = ",".join(map(str, b.prefix)) or "-"
            lines.append(
                f"  prefix {prefix}: multiplicity {b.multiplicity},"
                f" valuation {b.valuation}, aligned precision {b.k_align}"
            )
        lines.append(
            f"poincare: {self.poincare.to_text()}"
            f"  [deg {self.numerator_degree} / deg {self.denominator_degree}]"
        )
        lines.append(f"zeta: {self.zeta.to_text()}")
        return "\n".join(lines)


def report(f: IntPoly, p: int) -> ZetaReport:
    """Run the whole pipeline once and package every result."""
    pipe = _run_pipeline(f, p)
    p_series = _assemble_poincare(p, pipe)
    z = _zeta_from_poincare(p_series)
    return ZetaReport(
        poly=f,
        prime=p,
        content_shift=pipe.content_shift,
        disc_valuation=pipe.disc_valuation,
        stable_precision=pipe.stable_precision,
        branches=pipe.branches,
        poincare=p_series,
        zeta=z,
    )
