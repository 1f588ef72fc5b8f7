"""Exact polynomial kernel: rationals, univariate and binary forms, sparse forms."""

from fractions import Fraction

from .forms import BinaryForm, HomogeneousForm, restrict_to_line
from .parse import parse_form, parse_ints, parse_point
from .univariate import (
    PrimeFieldPoly,
    UniPoly,
    discriminant,
    distinct_degree_factorization,
    extended_gcd,
    factor_degrees_mod_p,
    interpolate,
    interpolate_mod_p,
    is_prime,
    is_squarefree,
    poly_gcd,
    primes_between,
    resultant,
    squarefree_decomposition,
    sylvester_resultant,
)

Rational = Fraction

__all__ = [
    "BinaryForm",
    "HomogeneousForm",
    "PrimeFieldPoly",
    "Rational",
    "UniPoly",
    "discriminant",
    "distinct_degree_factorization",
    "extended_gcd",
    "factor_degrees_mod_p",
    "interpolate",
    "interpolate_mod_p",
    "is_prime",
    "is_squarefree",
    "parse_form",
    "parse_ints",
    "parse_point",
    "poly_gcd",
    "primes_between",
    "restrict_to_line",
    "resultant",
    "squarefree_decomposition",
    "sylvester_resultant",
]
