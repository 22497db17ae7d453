"""
Local congruence relation: H(Frob) [1] vanishes in the coinvariant module
modulo q^{n-1}(q-1), tabulated over the plain and tilde polynomials and the
H^der and H_0 levels.
"""

from __future__ import annotations

import json
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Tuple

from loguru import logger

from cosets import FormalSum, apply_hecke_element, base_class
from hecke import HeckePolynomial, build_hecke_polynomial, specialize, tilde_specialize
from orbits import Level, frob_translate, project
from utils import (
    CheckStatus,
    DomainError,
    OperationBudget,
    Report,
    Stopwatch,
    divisibility_status,
    fail_report,
    guarded,
)


class Variant(str, Enum):
    PLAIN = "plain"
    TILDE = "tilde"


LEVELS = {"hder": Level.HDER, "h0": Level.H0}


def parse_level(text: str) -> Level:
    try:
        return LEVELS[text.lower()]
    except KeyError:
        raise DomainError(f"unknown level {text!r}, expected one of {sorted(LEVELS)}")


def variant_polynomial(n: int, q: int, variant: Variant) -> HeckePolynomial:
    poly = build_hecke_polynomial(n)
    return tilde_specialize(poly, q) if variant == Variant.TILDE else specialize(poly, q)


def congruence_modulus(n: int, q: int, variant: Variant) -> int:
    """q^{n-1}(q-1) for the tilde polynomial; q-1 in Z[1/q] for the plain one."""
    return q ** (n - 1) * (q - 1) if variant == Variant.TILDE else q - 1


def hecke_frobenius_sum(poly: HeckePolynomial, budget: OperationBudget = None) -> FormalSum:
    """sum_j A_j Frob^j [1] over G/K; Frob acts on the left, A_j on the right."""
    n, q = poly.n, poly.q
    start = FormalSum.basis(base_class(n, q))
    parts = []
    for j in sorted(poly.coefficients):
        parts.append(apply_hecke_element(poly.coefficients[j], frob_translate(start, j), n, q, budget))
    return FormalSum.sum(parts)

def _strip_q(value: int, q: int) -> Tuple[int, int]:
    """(e, m) with value = q^e m and q not dividing m."""
    e = 0
    while value and value % q == 0:
        value //= q
        e += 1
    return e, value


def coefficient_divisible(coeff, q: int, modulus: int, variant: Variant) -> bool:
    """Exact divisibility of one coefficient.

    tilde: an integer divisible by the modulus.  plain: an element of
    Z[1/q] whose prime-to-q part is divisible by the modulus.
    """
    value = Fraction(coeff)
    if variant == Variant.TILDE:
        return value.denominator == 1 and value.numerator % modulus == 0
    _, rest = _strip_q(value.denominator, q)
    if rest != 1:
        return False
    _, numerator = _strip_q(value.numerator, q)
    return numerator % modulus == 0


def _run(n: int, q: int, variant: Variant, level: Level, budget: OperationBudget) -> Report:
    watch = Stopwatch()
    params = {"n": n, "q": q, "variant": variant.value, "level": level.value}
    poly = variant_polynomial(n, q, variant)
    projected = project(hecke_frobenius_sum(poly, budget), level)
    modulus = congruence_modulus(n, q, variant)
    counts = {"classes": len(projected), "modulus": modulus, "operations": budget.spent}
    for key, coeff in projected.sorted_items():
        if not coefficient_divisible(coeff, q, modulus, variant):
            return fail_report("congruence", params, {"key": key.token(), "coefficient": str(coeff),
                                                      "modulus": modulus}, watch.millis, counts)
    logger.info(f"H(Frob)[1] is divisible by {modulus} at {level.value} for n={n}, q={q}, {variant.value}")
    return Report(check="congruence", params=params, status=divisibility_status(modulus), counts=counts,
                  millis=watch.millis)


def check_congruence_theorem(n: int, q: int, variant: Variant = Variant.TILDE, level: Level = Level.H0,
                             cap: int = 10_000_000) -> Report:
    params = {"n": n, "q": q, "variant": Variant(variant).value, "level": Level(level).value}
    return guarded("congruence", params,
                   lambda: _run(n, q, Variant(variant), Level(level), OperationBudget(cap)))


def congruence_table(n: int, q: int, cap: int = 10_000_000) -> Tuple[Report, List[Report]]:
    """All four variant/level cells; the summary passes iff the tilde/H_0 cell does."""
    watch = Stopwatch()
    cells = [check_congruence_theorem(n, q, variant, level, cap)
             for variant in (Variant.PLAIN, Variant.TILDE) for level in (Level.HDER, Level.H0)]
    table: Dict[str, str] = {f"{r.params['variant']}/{r.params['level']}": r.status.value for r in cells}
    params = {"n": n, "q": q}
    decisive = next(r for r in cells if r.params["variant"] == "tilde" and r.params["level"] == "H0")
    notes = list(decisive.notes)
    for cell in cells:
        name = f"{cell.params['variant']}/{cell.params['level']}"
        if cell.status == CheckStatus.FAIL and cell is not decisive:
            logger.warning(f"Congruence cell {name} fails for n={n}, q={q}")
            notes.append(f"{name} not divisible: {json.dumps(cell.witness, sort_keys=True)}")
    if decisive.status == CheckStatus.FAIL:
        summary = fail_report("congruence-table", params, {"tilde/H0": decisive.witness}, watch.millis, table)
        summary.notes.extend(notes)
    else:
        summary = Report(check="congruence-table", params=params, status=decisive.status, counts=table,
                         notes=notes, millis=watch.millis)
    return summary, cells
