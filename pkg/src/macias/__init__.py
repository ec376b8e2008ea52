"""Exact decision procedures for the Macias topology on the naturals.

The topology is generated by the coprimality sets sigma(n); periodic
subsets are represented as canonical residue sets, which makes openness,
density, closures, and continuity of polynomial and exponential maps fully
decidable questions.
"""
from .functions import (
    ContinuityVerdict,
    ExpFunction,
    ParseError,
    Polynomial,
    exp_continuity,
    exp_preimage_sigma,
    golomb_poly_is_continuous,
    parse_exp_function,
    parse_polynomial,
    poly_continuity,
    poly_preimage_sigma,
    schur_prime_divisors,
)
from .numtheory import (
    factorize,
    gcd,
    is_prime,
    multiplicative_order,
    primes_from,
    primes_in_progression,
    radical,
)
from .residues import ALL, EMPTY, ResidueSet, make
from .residues import parse as parse_residue_set
from .topology import (
    closure_finite,
    closure_product_check,
    closure_singleton,
    fresh_prime_in_sigma,
    is_dense,
    is_open,
    sigma,
)

__version__ = "0.1.0"

__all__ = [
    "ALL",
    "EMPTY",
    "ContinuityVerdict",
    "ExpFunction",
    "ParseError",
    "Polynomial",
    "ResidueSet",
    "closure_finite",
    "closure_product_check",
    "closure_singleton",
    "exp_continuity",
    "exp_preimage_sigma",
    "factorize",
    "fresh_prime_in_sigma",
    "gcd",
    "golomb_poly_is_continuous",
    "is_dense",
    "is_open",
    "is_prime",
    "make",
    "multiplicative_order",
    "parse_exp_function",
    "parse_polynomial",
    "parse_residue_set",
    "poly_continuity",
    "poly_preimage_sigma",
    "primes_from",
    "primes_in_progression",
    "radical",
    "schur_prime_divisors",
    "sigma",
]
