"""
The module Z[G/K]: formal sums, minuscule double cosets and the Hecke action.
"""

from .formal_sum import FormalSum
from .double_cosets import (
    Factor,
    MinusculeCochar,
    gaussian_binomial,
    minuscule_representatives,
    decompose_double_coset,
    bfs_double_coset_keys,
)
from .action import (
    Monomial,
    unit_monomial,
    monomial_generators,
    base_class,
    apply_generator,
    hecke_apply,
    left_translate_cosets,
    left_translation,
    specialized_coefficient,
    apply_hecke_element,
    evaluate_hecke_poly,
)

__all__ = [
    "FormalSum",
    "Factor",
    "MinusculeCochar",
    "gaussian_binomial",
    "minuscule_representatives",
    "decompose_double_coset",
    "bfs_double_coset_keys",
    "Monomial",
    "unit_monomial",
    "monomial_generators",
    "base_class",
    "apply_generator",
    "hecke_apply",
    "left_translate_cosets",
    "left_translation",
    "specialized_coefficient",
    "apply_hecke_element",
    "evaluate_hecke_poly",
]
