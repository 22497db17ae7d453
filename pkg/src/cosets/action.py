"""
Right Hecke action of minuscule generators on Z[G/K], left translations,
and evaluation of a Hecke polynomial at an operator.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterator, Tuple

from loguru import logger

from groups import CosetPair, GroupElement, coset_canonical_form, coset_pair_key
from utils import CoefficientError, NormalizationError, OperationBudget

from .double_cosets import Factor, MinusculeCochar, decompose_double_coset
from .formal_sum import FormalSum

# Exponents of (T_{1,V}, ..., T_{n+1,V}, T_{1,W}, ..., T_{n,W}).
Monomial = Tuple[int, ...]


def unit_monomial(n: int) -> Monomial:
    return (0,) * (2 * n + 1)


def monomial_generators(monomial: Monomial, n: int) -> Iterator[Tuple[MinusculeCochar, int]]:
    """The minuscule generators of a monomial with their exponents."""
    if len(monomial) != 2 * n + 1:
        raise CoefficientError(f"monomial {monomial} does not match n={n}")
    for idx, power in enumerate(monomial):
        if not power:
            continue
        if idx <= n:
            yield MinusculeCochar(Factor.V, idx + 1, n), power
        else:
            yield MinusculeCochar(Factor.W, idx - n, n), power


def base_class(n: int, q: int) -> CosetPair:
    """The distinguished class [1] = K."""
    return coset_pair_key(GroupElement.identity(n, q))


@lru_cache(maxsize=262144)
def _generator_image(key: CosetPair, lam: MinusculeCochar) -> Tuple[CosetPair, ...]:
    q = key.q
    reps = decompose_double_coset(lam, q)
    if lam.factor == Factor.V:
        g = key.first.to_matrix()
        return tuple(CosetPair(coset_canonical_form(g * r), key.second) for r in reps)
    g = key.second.to_matrix()
    return tuple(CosetPair(key.first, coset_canonical_form(g * r)) for r in reps)


def apply_generator(lam: MinusculeCochar, x: FormalSum, budget: OperationBudget = None) -> FormalSum:
    """x * T_lambda: every gK becomes the sum of g g_i K."""
    if budget is not None and x:
        q = next(iter(x)).q
        budget.charge(len(x) * len(decompose_double_coset(lam, q)), f"Hecke action of {lam.symbol}")
    return x.flat_map(lambda key: FormalSum.from_pairs((k, 1) for k in _generator_image(key, lam)))


def hecke_apply(monomial: Monomial, x: FormalSum, n: int, budget: OperationBudget = None) -> FormalSum:
    """Right convolution by a product of T_{k,V} and T_{k,W} symbols."""
    for lam, power in monomial_generators(monomial, n):
        for _ in range(power):
            x = apply_generator(lam, x, budget)
    return x


def left_translate_cosets(g: GroupElement, x: FormalSum) -> FormalSum:
    """Left multiplication g * (hK) on Z[G/K]."""
    return x.map_keys(lambda key: coset_pair_key(g * key.to_element()))


def left_translation(g: GroupElement) -> Callable[[FormalSum], FormalSum]:
    return lambda x: left_translate_cosets(g, x)


def specialized_coefficient(coeff, q: int) -> Fraction:
    """Numeric value of a Hecke coefficient at q."""
    if isinstance(coeff, (int, Fraction)):
        return Fraction(coeff)
    try:
        return coeff.specialize(q)
    except NormalizationError as e:
        raise CoefficientError(f"cannot evaluate coefficient {coeff} at q={q}: {e}") from e


def apply_hecke_element(element: Dict[Monomial, object], x: FormalSum, n: int, q: int,
                        budget: OperationBudget = None) -> FormalSum:
    """Apply a linear combination of monomials with numeric coefficients."""
    parts = []
    for monomial, coeff in sorted(element.items()):
        value = specialized_coefficient(coeff, q)
        if value:
            parts.append(value * hecke_apply(monomial, x, n, budget))
    return FormalSum.sum(parts)


def evaluate_hecke_poly(poly, x0: FormalSum, operator: Callable[[FormalSum], FormalSum],
                        budget: OperationBudget = None) -> FormalSum:
    """sum_k A_k X^k x0 for the coefficients A_k of ``poly`` and X = ``operator``."""
    n, q = poly.n, poly_q(poly, x0)
    total = FormalSum.zero()
    current = x0
    degree = poly.degree
    for k in range(degree + 1):
        element = poly.coefficients.get(k)
        if element:
            total = total + apply_hecke_element(element, current, n, q, budget)
        if k < degree:
            current = operator(current)
    logger.debug(f"Evaluated Hecke polynomial n={n} q={q}: {len(total)} surviving terms")
    return total


def poly_q(poly, x0: FormalSum) -> int:
    q = getattr(poly, "q", None)
    if q is not None:
        return q
    if not x0:
        raise CoefficientError("cannot infer q from an empty sum and a symbolic polynomial")
    return next(iter(x0)).q
