"""Exact solver for second-order linear difference equations with
polynomial coefficients, via linear factorization of the shift operator,
plus generalized continued fraction evaluation built on the same
machinery.  Includes two fully verified continued fraction
representations of 8/pi^2 and 18/pi^2."""

from .arith import (
    DEFAULT_PRECISION,
    BigDecimal,
    Rational,
    pi_squared_reference,
    rat_add,
    rat_div,
    rat_mul,
    rat_sub,
    to_decimal,
    validate_pi_literal,
)
from .contfrac import CFSpec, ConvergentPair, cf_to_recurrence, convergents, value
from .errors import (
    DivisionByZero,
    DomainViolation,
    FactorizationBreakdown,
    HorizonMismatch,
    IndeterminateConvergent,
    NotHomogeneous,
    ParseError,
    PrecisionUnsupported,
    ProductFormInapplicable,
)
from .factorize import Factorization, compute_cd, default_d1, verify_split
from .pi_squared import (
    CASE_8_OVER_PI_SQ,
    CASE_18_OVER_PI_SQ,
    CASES,
    Pi2Case,
    Report,
    check_A_closed_form,
    check_B_series,
    check_factorization_closed_form,
    check_limit,
    odd_double_factorial,
)
from .sequences import PolySeq, Recurrence, format_polyseq, parse_polyseq
from .solve import (
    SolutionTrace,
    SolveMethod,
    closed_form_homogeneous,
    closed_form_nonhomogeneous,
    iterate_direct,
    product_solution,
)

__version__ = "0.1.0"

__all__ = [
    "BigDecimal",
    "CASE_18_OVER_PI_SQ",
    "CASE_8_OVER_PI_SQ",
    "CASES",
    "CFSpec",
    "ConvergentPair",
    "DEFAULT_PRECISION",
    "DivisionByZero",
    "DomainViolation",
    "Factorization",
    "FactorizationBreakdown",
    "HorizonMismatch",
    "IndeterminateConvergent",
    "NotHomogeneous",
    "ParseError",
    "Pi2Case",
    "PolySeq",
    "PrecisionUnsupported",
    "ProductFormInapplicable",
    "Rational",
    "Recurrence",
    "Report",
    "SolutionTrace",
    "SolveMethod",
    "cf_to_recurrence",
    "check_A_closed_form",
    "check_B_series",
    "check_factorization_closed_form",
    "check_limit",
    "closed_form_homogeneous",
    "closed_form_nonhomogeneous",
    "compute_cd",
    "convergents",
    "default_d1",
    "format_polyseq",
    "iterate_direct",
    "odd_double_factorial",
    "parse_polyseq",
    "pi_squared_reference",
    "product_solution",
    "rat_add",
    "rat_div",
    "rat_mul",
    "rat_sub",
    "to_decimal",
    "validate_pi_literal",
    "value",
]
