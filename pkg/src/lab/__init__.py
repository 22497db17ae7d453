"""
Verifiers for the local identities and the acceptance suite.
"""

from .report import sort_reports, reports_json, write_reports
from .root_identity import check_root_identity, estimate_cost
from .divisibility import (
    EpsilonAlpha,
    order_pattern,
    u_epsilon,
    epsilon_alpha_decompose,
    count_J,
    bruteforce_count_J,
    epsilon_patterns,
    check_count_j,
    regrouped_difference,
    check_divisibility_lemma,
)
from .congruence import (
    Variant,
    parse_level,
    variant_polynomial,
    congruence_modulus,
    hecke_frobenius_sum,
    coefficient_divisible,
    check_congruence_theorem,
    congruence_table,
)
from .lift import construct_horizontal_lift
from .coset_checks import (
    check_coset_counts,
    check_u_power_cosets,
    check_normal_form_invariance,
    check_hecke_commutativity,
    check_refined_keys,
)
from .suite import Profile, SuiteTask, build_tasks, check_hecke_fixture, execute_task, run_suite

__all__ = [
    "sort_reports",
    "reports_json",
    "write_reports",
    "check_root_identity",
    "estimate_cost",
    "EpsilonAlpha",
    "order_pattern",
    "u_epsilon",
    "epsilon_alpha_decompose",
    "count_J",
    "bruteforce_count_J",
    "epsilon_patterns",
    "check_count_j",
    "regrouped_difference",
    "check_divisibility_lemma",
    "Variant",
    "parse_level",
    "variant_polynomial",
    "congruence_modulus",
    "hecke_frobenius_sum",
    "coefficient_divisible",
    "check_congruence_theorem",
    "congruence_table",
    "construct_horizontal_lift",
    "check_coset_counts",
    "check_u_power_cosets",
    "check_normal_form_invariance",
    "check_hecke_commutativity",
    "check_refined_keys",
    "Profile",
    "SuiteTask",
    "build_tasks",
    "check_hecke_fixture",
    "execute_task",
    "run_suite",
]
