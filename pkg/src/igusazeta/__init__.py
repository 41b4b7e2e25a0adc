"""Exact computation of root counts modulo prime powers, representative
roots, Poincare series, and Igusa local zeta functions of integer univariate
polynomials, with a built-in brute-force oracle for verification.

All arithmetic is exact (arbitrary-precision integers and rationals); no
floating point is used anywhere in the computation.
"""

from .errors import (
    BudgetExceeded,
    DegreeZero,
    DivisionByZero,
    IdenticallyZeroModP,
    InconsistentLengths,
    ParseError,
    PoleAtZero,
    RegimeViolation,
    VariableError,
    ZeroPolynomial,
    ZetaError,
)
from .exactpoly import (
    IntPoly,
    RatPoly,
    compose_linear,
    content_and_primitive,
    derivative,
    discriminant,
    evaluate,
    poly_gcd,
    resultant,
    squarefree_part,
)
from .padic import (
    RepRoot,
    count_roots,
    is_prime,
    representative_roots,
    roots_mod_p,
    valuation,
)
from .ratfun import RationalFunction
from .igusa import (
    BranchParams,
    ZetaReport,
    closed_form_count,
    discriminant_valuation,
    extract_branches,
    poincare_series,
    report,
    root_count,
    stability_threshold,
    zeta_function,
)
from .oracle import (
    CheckResult,
    VerificationReport,
    brute_count,
    brute_rep_roots,
    verify_instance,
)
from .cli import parse_poly

__version__ = "0.1.0"
