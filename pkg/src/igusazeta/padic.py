"""p-adic valuations, representative roots modulo prime powers, and exact root counts.

A representative root packages a whole family of roots of f mod p^k: a fixed
base-p digit prefix of length l together with every possible choice of the
remaining k - l digits.  The root set of f mod p^k is the disjoint union of
at most deg(f) such families (plus possibly the single length-0 family when
every residue is a root), which is what makes exact counting cheap even when
p^k is astronomically large.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator

from .errors import IdenticallyZeroModP
from .exactpoly import IntPoly, compose_linear

DEFAULT_SCAN_THRESHOLD = 1 << 16

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def valuation(a: int, p: int) -> int | float:
    """Exponent of the largest power of p dividing a; math.inf for a = 0."""
    if a == 0:
        return math.inf
    v = 0
    a = abs(a)
    while a % p == 0:
        a //= p
        v += 1
    return v


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin with a fixed witness set.

    The witness set is proven complete for n < 3.317e24, far beyond any
    modulus this library can process; no randomness is involved.
    """
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class RepRoot:
    """One representative root of f mod p^k: the residues congruent to the
    digit prefix modulo p^length, all of which are roots.

    A maximal representative root additionally has the property that dropping
    its last fixed digit would admit a non-root.
    """

    p: int
    k: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if self.p < 2:
            raise ValueError("p must be at least 2")
        if self.k < 0:
            raise ValueError("k must be nonnegative")
        if len(self.digits) > self.k:
            raise ValueError("prefix longer than the precision")
        if any(d < 0 or d >= self.p for d in self.digits):
            raise ValueError("digits must lie in [0, p)")

    @property
    def length(self) -> int:
        return len(self.digits)

    @property
    def value(self) -> int:
        """The smallest residue in the family."""
        acc = 0
        for d in reversed(self.digits):
            acc = acc * self.p + d
        return acc

    @property
    def count(self) -> int:
        """Number of residues mod p^k in the family: p^(k - length)."""
        return self.p ** (self.k - self.length)

    def covers(self, x: int) -> bool:
        return (x - self.value) % self.p ** self.length == 0

    def residues(self) -> Iterator[int]:
        """All residues in the family; only sensible when p^(k-l) is small."""
        step = self.p**self.length
        v = self.value
        for m in range(self.count):
            yield v + m * step

    def describe(self) -> str:
        if not self.digits:
            return f"all residues (mod {self.p}^{self.k})"
        return (
            f"{self.value} + {self.p}^{self.length}*m"
            f" (mod {self.p}^{self.k}), digits {','.join(map(str, self.digits))}"
        )

    def to_json_dict(self) -> dict:
        return {"digits": [str(d) for d in self.digits], "length": self.length}


def _reduce_mod_p(f: IntPoly, p: int) -> list[int]:
    cs = [c % p for c in f.coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def roots_mod_p(f: IntPoly, p: int, scan_threshold: int | None = None) -> list[int]:
    """All residues r in [0, p) with f(r) = 0 mod p, sorted.

    Two backends share this contract: an exhaustive scan (the default for
    p below `scan_threshold`, deterministic) and gcd with x^p - x followed by
    equal-degree splitting for large p.  The splitting backend draws its
    splitting elements from a seeded generator, so its output is exact and
    reproducible.
    """
    thr = DEFAULT_SCAN_THRESHOLD if scan_threshold is None else scan_threshold
    fp = _reduce_mod_p(f, p)
    if not fp:
        raise IdenticallyZeroModP(f"polynomial is identically zero mod {p}")
    if p == 2 or p < thr:
        out = []
        for r in range(p):
            acc = 0
            for c in reversed(fp):
                acc = (acc * r + c) % p
            if acc == 0:
                out.append(r)
        return out
    return _roots_by_splitting(fp, p)


# ---------------------------------------------------------------------------
# F_p polynomial helpers for the splitting backend (coefficients ascending).


def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_monic(a: list[int], p: int) -> list[int]:
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _fp_sub(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _fp_trim(out)


def _fp_rem(a: list[int], m: list[int], p: int) -> list[int]:
    # m monic
    a = a[:]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        a[i] = 0
        if c:
            for j in range(dm):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _fp_trim([c % p for c in a[:dm]])


def _fp_mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] = (out[i + j] + ca * cb) % p
    return _fp_rem(out, m, p)


def _fp_powmod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _fp_rem(base, m, p)
    while e:
        if e & 1:
            result = _fp_mulmod(result, base, m, p)
        base = _fp_mulmod(base, base, m, p)
        e >>= 1
    return result


def _fp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = a[:], b[:]
    while b:
        b = _fp_monic(b, p)
        a, b = b, _fp_rem(a, b, p)
    return _fp_monic(a, p) if a else []


def _fp_divexact(a: list[int], b: list[int], p: int) -> list[int]:
    # b monic, b | a
    b = _fp_monic(b, p)
    a = a[:]
    dq = len(a) - len(b)
    quo = [0] * (dq + 1)
    for i in range(dq, -1, -1):
        c = a[len(b) - 1 + i] % p
        quo[i] = c
        if c:
            for j, bc in enumerate(b):
                a[i + j] = (a[i + j] - c * bc) % p
    return _fp_trim(quo)


def _roots_by_splitting(fp: list[int], p: int) -> list[int]:
    f = _fp_monic(fp, p)
    if len(f) == 1:
        return []
    xp = _fp_powmod([0, 1], p, f, p)
    lin = _fp_gcd(_fp_sub(xp, [0, 1], p), f, p)
    if len(lin) <= 1:
        return []
    roots: list[int] = []
    rng = random.Random(0x5EED ^ p)
    stack = [lin]
    while stack:
        g = stack.pop()
        if len(g) == 2:
            roots.append(-g[0] % p)
            continue
        while True:
            a = rng.randrange(p)
            h = _fp_powmod([a, 1], (p - 1) // 2, g, p)
            u = _fp_gcd(_fp_sub(h, [1], p), g, p)
            if 1 < len(u) < len(g):
                stack.append(u)
                stack.append(_fp_divexact(g, u, p))
                break
    return sorted(roots)


# ---------------------------------------------------------------------------
# Representative-root enumeration.


def _p_content(f: IntPoly, p: int) -> int:
    v = None
    for c in f.coeffs:
        if c == 0:
            continue
        w = 0
        a = abs(c)
        while a % p == 0:
            a //= p
            w += 1
        v = w if v is None else min(v, w)
        if v == 0:
            break
    return v if v is not None else 0


def _rep_tails(f: IntPoly, p: int, k: int, thr: int | None) -> set[tuple[int, ...]]:
    """Digit tuples of the maximal representative roots of f mod p^k.

    Iterative post-order over the lifting tree: for each root r of the current
    polynomial g mod p, substitute x -> r + p*x, strip the p-power content v,
    and either stop (v covers the remaining precision: every extension is a
    root) or descend with precision reduced by v.  When all p residues of a
    level turn out to be fully covered, they merge to the shorter prefix,
    which keeps the output maximal.
    """
    # frame: [g, k_rem, root list, next root index, pieces found so far]
    stack: list[list] = [[f, k, None, 0, set()]]
    child: set[tuple[int, ...]] | None = None
    child_digit = 0
    while True:
        frame = stack[-1]
        g, k_rem = frame[0], frame[1]
        if frame[2] is None:
            frame[2] = roots_mod_p(g, p, thr)
        if child is not None:
            frame[4].update((child_digit, *tail) for tail in child)
            child = None
        if frame[3] < len(frame[2]):
            r = frame[2][frame[3]]
            frame[3] += 1
            h = compose_linear(g, r, p)
            v = _p_content(h, p)
            assert v >= 1, "substituting a root of g mod p must divide out p"
            if v >= k_rem:
                frame[4].add((r,))
            else:
                q = p**v
                shifted = IntPoly(c // q for c in h.coeffs)
                stack.append([shifted, k_rem - v, None, 0, set()])
            continue
        out = frame[4]
        if len(out) == p and all(len(t) == 1 for t in out):
            out = {()}
        stack.pop()
        if not stack:
            return out
        child = out
        child_digit = stack[-1][2][stack[-1][3] - 1]


def representative_roots(
    f: IntPoly, p: int, k: int, scan_threshold: int | None = None
) -> list[RepRoot]:
    """The maximal disjoint representative-root decomposition of the root set
    of f mod p^k, sorted by digit string.

    Requires k >= 1 and f not identically zero mod p (strip the p-power
    content first, see `exactpoly.content_and_primitive`).
    """
    if k < 1:
        raise ValueError("precision k must be positive")
    if not _reduce_mod_p(f, p):
        raise IdenticallyZeroModP(f"polynomial is identically zero mod {p}")
    tails = _rep_tails(f, p, k, scan_threshold)
    return sorted(
        (RepRoot(p=p, k=k, digits=d) for d in tails), key=lambda r: r.digits
    )


def count_roots(f: IntPoly, p: int, k: int, scan_threshold: int | None = None) -> int:
    """Exact number of roots of f mod p^k (1 for k = 0 by convention)."""
    if k < 0:
        raise ValueError("precision k must be nonnegative")
    if k == 0:
        return 1
    reps = representative_roots(f, p, k, scan_threshold)
    return sum(r.count for r in reps)
