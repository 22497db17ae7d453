"""
H\\G/K orbit geometry: normal forms, stabilizer determinants and refined keys.
"""

from .normal_form import (
    NormalForm,
    Witness,
    ClassInvariant,
    reduce_matrix,
    normal_form,
    class_invariant,
    invariant_of,
    normal_form_from_invariant,
)
from .stabilizer import (
    StabKind,
    StabDetDescriptor,
    pair_exponents,
    stabilizer_det,
    stabilizer_det_ab,
    conductor,
    fixes_coset,
    stabilizer_witness,
    unit_classes,
    bruteforce_stabilizer_dets,
    normal_form_grid,
    verify_stabilizer_formula,
)
from .refined import (
    Level,
    RefinedKey,
    make_key,
    refined_key,
    key_of_coset,
    coarsen,
    project,
    translate_key,
    translate_by_det,
    left_translate,
    frobenius,
    frob_translate,
    check_h1_invariant,
    trace_1_0,
)

__all__ = [
    "NormalForm",
    "Witness",
    "ClassInvariant",
    "reduce_matrix",
    "normal_form",
    "class_invariant",
    "invariant_of",
    "normal_form_from_invariant",
    "StabKind",
    "StabDetDescriptor",
    "pair_exponents",
    "stabilizer_det",
    "stabilizer_det_ab",
    "conductor",
    "fixes_coset",
    "stabilizer_witness",
    "unit_classes",
    "bruteforce_stabilizer_dets",
    "normal_form_grid",
    "verify_stabilizer_formula",
    "Level",
    "RefinedKey",
    "make_key",
    "refined_key",
    "key_of_coset",
    "coarsen",
    "project",
    "translate_key",
    "translate_by_det",
    "left_translate",
    "frobenius",
    "frob_translate",
    "check_h1_invariant",
    "trace_1_0",
]
