"""
Unit indices of local orders and the Galois degree of the local layer.
"""

from .local_orders import (
    SPLIT,
    INERT,
    LocalOrderParams,
    unit_index,
    step_index,
    galois_degree,
    irreducible_quadratic,
    bruteforce_unit_index,
    bruteforce_step_index,
    check_local_orders,
)

__all__ = [
    "SPLIT",
    "INERT",
    "LocalOrderParams",
    "unit_index",
    "step_index",
    "galois_degree",
    "irreducible_quadratic",
    "bruteforce_unit_index",
    "bruteforce_step_index",
    "check_local_orders",
]
