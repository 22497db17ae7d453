"""
Exact arithmetic in F_q((w)).
"""

from .residue import ResidueScalar, check_prime, primitive_root, inverse_mod
from .laurent import LaurentPoly, poly_divmod, poly_gcd
from .field import FieldElem, field_arith, valuation, series_truncate, w
from .parsing import parse_field_elem

__all__ = [
    "ResidueScalar",
    "check_prime",
    "primitive_root",
    "inverse_mod",
    "LaurentPoly",
    "poly_divmod",
    "poly_gcd",
    "FieldElem",
    "field_arith",
    "valuation",
    "series_truncate",
    "w",
    "parse_field_elem",
]
