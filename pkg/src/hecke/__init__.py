"""
Hecke polynomials of the split pair and the brute-force Satake oracle.
"""

from .coefficients import SLaurent
from .polynomial import (
    SymPoly,
    HeckePolynomial,
    monomial_text,
    render_coefficient,
    render_polynomial,
    parse_coefficient,
    parse_polynomial,
    specialize,
    tilde_specialize,
)
from .symbolics import (
    basis_symbols,
    t_exponent,
    newton_girard,
    elementary_of_products,
    expand_product,
    expand_product_raw,
    satake_shift,
    satake_substitute,
    build_hecke_polynomial,
)
from .fixtures import fixture_path, write_fixture, load_fixture, diff_against_fixture
from .satake import (
    modulus_function,
    modulus_half,
    fold_count,
    unipotent_count,
    satake_transform_bruteforce,
    weight_candidates,
    expected_coefficient,
    verify_dictionary,
)

__all__ = [
    "SLaurent",
    "SymPoly",
    "HeckePolynomial",
    "monomial_text",
    "render_coefficient",
    "render_polynomial",
    "parse_coefficient",
    "parse_polynomial",
    "specialize",
    "tilde_specialize",
    "basis_symbols",
    "t_exponent",
    "newton_girard",
    "elementary_of_products",
    "expand_product",
    "expand_product_raw",
    "satake_shift",
    "satake_substitute",
    "build_hecke_polynomial",
    "fixture_path",
    "write_fixture",
    "load_fixture",
    "diff_against_fixture",
    "modulus_function",
    "modulus_half",
    "fold_count",
    "unipotent_count",
    "satake_transform_bruteforce",
    "weight_candidates",
    "expected_coefficient",
    "verify_dictionary",
]
