"""
The U-operator on the distinguished class.
"""

from .u_operator import (
    UConfig,
    frob_power,
    lifts,
    first_row_unipotent,
    u_power_reps,
    u_power_apply,
    u_step,
    u_iterate,
)

__all__ = [
    "UConfig",
    "frob_power",
    "lifts",
    "first_row_unipotent",
    "u_power_reps",
    "u_power_apply",
    "u_step",
    "u_iterate",
]
