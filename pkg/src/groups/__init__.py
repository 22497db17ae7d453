"""
Matrices over F, the group GL_{n+1} x GL_n, Cartan invariants and coset keys.
"""

from .matrix import Mat, GroupElement, embed_iota, elementary
from .reduction import cartan_invariants, hermite_reduce
from .coset_key import CosetKey, CosetPair, coset_canonical_form, coset_pair_key
from .subgroups import SubgroupTag, SubgroupSpec, is_member, det_in_level

__all__ = [
    "Mat",
    "GroupElement",
    "embed_iota",
    "elementary",
    "cartan_invariants",
    "hermite_reduce",
    "CosetKey",
    "CosetPair",
    "coset_canonical_form",
    "coset_pair_key",
    "SubgroupTag",
    "SubgroupSpec",
    "is_member",
    "det_in_level",
]

from .sampling import (
    random_poly,
    random_unit,
    random_k,
    random_matrix,
    random_group_element,
    random_k_pair,
    random_h,
)

__all__ += [
    "random_poly",
    "random_unit",
    "random_k",
    "random_matrix",
    "random_group_element",
    "random_k_pair",
    "random_h",
]
