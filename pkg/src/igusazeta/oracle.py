"""Brute-force ground truth used to verify the whole pipeline.

Everything here works by direct enumeration of all residues mod p^k, so it is
independent of the lifting recursion and the closed forms it checks.  The
enumeration is vectorized with int64 arrays when the modulus is small enough
for products to stay exact, and falls back to plain Python integers beyond.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import BudgetExceeded
from .exactpoly import IntPoly, content_and_primitive
from .igusa import closed_form_count, root_count, _run_pipeline, poincare_series
from .padic import RepRoot, count_roots, representative_roots

DEFAULT_BUDGET = 10**7

# isqrt(2^63 - 1): products of residues below this stay inside int64.
_INT64_SAFE_MODULUS = 3_037_000_499


def _check_budget(p: int, k: int, budget: int) -> int:
    m = p**k
    if m > budget:
        raise BudgetExceeded(f"p^k = {m} exceeds the enumeration budget {budget}")
    return m


def _values_mod(f: IntPoly, m: int) -> "np.ndarray | None":
    """f evaluated at every residue mod m, or None when int64 cannot hold it."""
    if m > _INT64_SAFE_MODULUS:
        return None
    xs = np.arange(m, dtype=np.int64)
    acc = np.zeros(m, dtype=np.int64)
    for c in reversed(f.coeffs):
        acc *= xs
        acc += c % m
        acc %= m
    return acc


def brute_count(f: IntPoly, p: int, k: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of roots of f mod p^k by evaluating every residue."""
    m = _check_budget(p, k, budget)
    vals = _values_mod(f, m)
    if vals is not None:
        return int(np.count_nonzero(vals == 0))
    count = 0
    coeffs = [c % m for c in f.coeffs]
    for x in range(m):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % m
        if acc == 0:
            count += 1
    return count


def _brute_roots(f: IntPoly, m: int) -> list[int]:
    vals = _values_mod(f, m)
    if vals is not None:
        return [int(x) for x in np.nonzero(vals == 0)[0]]
    coeffs = [c % m for c in f.coeffs]
    out = []
    for x in range(m):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % m
        if acc == 0:
            out.append(x)
    return out


def brute_rep_roots(
    f: IntPoly, p: int, k: int, budget: int = DEFAULT_BUDGET
) -> list[RepRoot]:
    """The maximal disjoint representative-root decomposition of the actual
    root set, built greedily: a prefix is emitted once all of its extensions
    are roots while the one-digit-shorter prefix has a non-root extension.
    """
    m = _check_budget(p, k, budget)
    roots = _brute_roots(f, m)
    reps: list[tuple[int, ...]] = []
    if len(roots) == m:
        reps.append(())
    elif roots:
        _decompose(roots, p, k, 0, (), reps)
    return sorted((RepRoot(p=p, k=k, digits=d) for d in reps), key=lambda r: r.digits)


def _decompose(
    vals: list[int],
    p: int,
    k: int,
    level: int,
    prefix: tuple[int, ...],
    out: list[tuple[int, ...]],
) -> None:
    # vals: the roots congruent to prefix mod p^level, nonempty.
    if len(vals) == p ** (k - level):
        out.append(prefix)
        return
    step = p**level
    groups: dict[int, list[int]] = {}
    for v in vals:
        groups.setdefault((v // step) % p, []).append(v)
    for digit in sorted(groups):
        _decompose(groups[digit], p, k, level + 1, prefix + (digit,), out)


@dataclass(frozen=True)
class CheckResult:
    name: str
    expected: str
    actual: str
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class VerificationReport:
    poly: IntPoly
    prime: int
    kmax: int
    budget: int
    checks: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "poly": self.poly.to_text(),
            "prime": str(self.prime),
            "kmax": self.kmax,
            "budget": self.budget,
            "checks": [c.to_json_dict() for c in self.checks],
            "all_pass": self.all_pass,
        }


def _fmt_reps(reps: list[RepRoot]) -> str:
    if not reps:
        return "-"
    return "|".join(",".join(map(str, r.digits)) if r.digits else "()" for r in reps)


def verify_instance(
    f: IntPoly, p: int, kmax: int, budget: int = DEFAULT_BUDGET
) -> VerificationReport:
    """Cross-check the pipeline against brute enumeration for one (f, p).

    Compares root counts and representative roots for every k with
    p^k <= budget, the Poincare series coefficients up to kmax, and the
    closed-form counts on the stable window.  Failures become report entries,
    never exceptions.
    """
    checks: list[CheckResult] = []
    shift, g = content_and_primitive(f, p)

    k = 0
    while p**k <= budget and k <= kmax:
        expected = brute_count(f, p, k, budget)
        actual = root_count(f, p, k)
        checks.append(
            CheckResult(f"count k={k}", str(expected), str(actual), expected == actual)
        )
        k += 1

    k = 1
    while p**k <= budget and k <= kmax:
        expected = brute_rep_roots(g, p, k, budget)
        actual = representative_roots(g, p, k)
        checks.append(
            CheckResult(
                f"rep-roots k={k}",
                _fmt_reps(expected),
                _fmt_reps(actual),
                expected == actual,
            )
        )
        k += 1

    series = poincare_series(f, p).series(kmax)
    for k in range(kmax + 1):
        want = Fraction(root_count(f, p, k), p**k)
        got = series[k]
        checks.append(CheckResult(f"series k={k}", str(want), str(got), want == got))

    if g.degree >= 1:
        pipe = _run_pipeline(g, p)
        k0 = pipe.stable_precision
        for k in range(k0, k0 + 2 * g.degree + 3):
            expected = count_roots(g, p, k)
            actual = closed_form_count(pipe.branches, p, k, k0)
            checks.append(
                CheckResult(
                    f"closed-form k={k}", str(expected), str(actual), expected == actual
                )
            )

    return VerificationReport(
        poly=f, prime=p, kmax=kmax, budget=budget, checks=tuple(checks)
    )
