"""Exact real-root counting and isolation with Sturm sequences."""

from sturmroots.isolation import RootReport, isolate_roots, refine_root
from sturmroots.parsing import ParseError, format_polynomial, format_rational, parse_coeffs, parse_expression
from sturmroots.poly import (
    DomainError,
    NotDivisibleError,
    Polynomial,
    Rational,
    cauchy_bound,
    derivative,
    evaluate,
    exact_divide,
    gcd,
    monic,
    poly_divmod,
    poly_from_coeffs,
    poly_from_roots,
    square_free_part,
)
from sturmroots.sturm import (
    V,
    DegenerateEndpointError,
    EndpointPolicy,
    Interval,
    SturmSequence,
    count_distinct_real_roots,
    count_roots_half_open,
    generalized_sequence,
    is_multiple_root,
    sign,
    sign_sequence,
    sign_variations,
    sturm_sequence,
    variations,
)

__all__ = [
    "DegenerateEndpointError",
    "DomainError",
    "EndpointPolicy",
    "Interval",
    "NotDivisibleError",
    "ParseError",
    "Polynomial",
    "Rational",
    "RootReport",
    "SturmSequence",
    "V",
    "cauchy_bound",
    "count_distinct_real_roots",
    "count_roots_half_open",
    "derivative",
    "evaluate",
    "exact_divide",
    "format_polynomial",
    "format_rational",
    "gcd",
    "generalized_sequence",
    "is_multiple_root",
    "isolate_roots",
    "monic",
    "parse_coeffs",
    "parse_expression",
    "poly_divmod",
    "poly_from_coeffs",
    "poly_from_roots",
    "refine_root",
    "sign",
    "sign_sequence",
    "sign_variations",
    "square_free_part",
    "sturm_sequence",
    "variations",
]
