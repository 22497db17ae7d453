"""
Horizontal lift: an H_1-invariant x at the H^der level with
Tr_{1,0} x = H(Frob) phi([1]).
"""

from __future__ import annotations

from collections import defaultdict
from typing import Dict, List, Tuple

from loguru import logger

from cosets import FormalSum
from orbits import Level, RefinedKey, conductor, project, trace_1_0
from utils import CheckStatus, InternalError, OperationBudget, Report, Stopwatch, fail_report, guarded

from .congruence import Variant, coefficient_divisible, hecke_frobenius_sum, variant_polynomial

CHECK = "horizontal-lift"


def _groups(y: FormalSum) -> Dict[Tuple, List[Tuple[RefinedKey, object]]]:
    grouped = defaultdict(list)
    for key, coeff in y.sorted_items():
        grouped[(key.invariant, key.shift)].append((key, coeff))
    return grouped


def _lift(y: FormalSum, q: int, variant: Variant) -> Tuple[FormalSum, Dict[str, int], Dict]:
    """(x, counts, witness); the witness is empty unless the lift does not exist."""
    pairs = []
    counts = {"conductor_0": 0, "higher_conductor": 0}
    for (invariant, shift), members in sorted(_groups(y).items(), key=lambda kv: kv[1][0][0].token()):
        if conductor(invariant) == 0:
            key, coeff = members[0]
            if not coefficient_divisible(coeff, q, q - 1, variant):
                return FormalSum.zero(), counts, {"key": key.token(), "coefficient": str(coeff), "modulus": q - 1}
            pairs.append((key, coeff / (q - 1)))
            counts["conductor_0"] += 1
            continue
        values = {coeff for _, coeff in members}
        if len(values) != 1:
            return FormalSum.zero(), counts, {"key": members[0][0].token(), "coefficients": sorted(str(v) for v in values)}
        pairs.extend((key, coeff) for key, coeff in members if key.unit.coefficient(0) == 1)
        counts["higher_conductor"] += 1
    return FormalSum.from_pairs(pairs), counts, {}


def _run(n: int, q: int, variant: Variant, budget: OperationBudget) -> Tuple[FormalSum, Report]:
    watch = Stopwatch()
    params = {"n": n, "q": q, "variant": variant.value}
    poly = variant_polynomial(n, q, variant)
    y = project(hecke_frobenius_sum(poly, budget), Level.HDER)
    x, counts, witness = _lift(y, q, variant)
    counts["classes"] = len(y)
    if witness:
        return FormalSum.zero(), fail_report(CHECK, params, witness, watch.millis, counts)
    if trace_1_0(x) != y:
        raise InternalError(f"Tr_(1,0) of the lift differs from H(Frob)[1] for n={n}, q={q}")
    counts["lift_terms"] = len(x)
    logger.info(f"Horizontal lift for n={n}, q={q}: {len(x)} terms over {len(y)} classes")
    return x, Report(check=CHECK, params=params, status=CheckStatus.PASS, counts=counts, millis=watch.millis)


def construct_horizontal_lift(n: int, q: int, variant: Variant = Variant.TILDE,
                              cap: int = 10_000_000) -> Tuple[FormalSum, Report]:
    """x with trace_1_0(x) = H(Frob) phi([1]); x = 0 and a FAIL report when no lift exists."""
    params = {"n": n, "q": q, "variant": Variant(variant).value}
    result: Dict[str, FormalSum] = {"x": FormalSum.zero()}

    def run() -> Report:
        result["x"], report = _run(n, q, Variant(variant), OperationBudget(cap))
        return report

    report = guarded(CHECK, params, run)
    return result["x"], report
