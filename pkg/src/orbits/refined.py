"""
Refined class keys for the quotients H^der\\G/K, H_1\\G/K and H_0\\G/K,
projections of Z[G/K] onto them, left translation and the trace Tr_{1,0}.

A refined key is the H-class invariant together with det h mod det Stab,
h being the H-element carrying the normal-form representative to g.  The
valuation of det h is the shift; its unit part is kept modulo w^cond at
the H^der level, modulo w at the H_1 level and dropped at the H_0 level.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from enum import Enum
from functools import lru_cache
from typing import Optional, Union

from loguru import logger

from cosets import FormalSum, left_translate_cosets
from groups import CosetPair, GroupElement, Mat, SubgroupSpec, SubgroupTag, is_member
from localfield import FieldElem, LaurentPoly
from utils import DomainError, InvarianceError

from .normal_form import ClassInvariant, class_invariant, normal_form
from .stabilizer import stabilizer_det


class Level(str, Enum):
    """Quotient level, finest first."""
    HDER = "Hder"
    H1 = "H1"
    H0 = "H0"


_RANK = {Level.HDER: 0, Level.H1: 1, Level.H0: 2}


@dataclass(frozen=True)
class RefinedKey:
    """Class of gK modulo a subgroup between H^der and H_0."""
    invariant: ClassInvariant
    shift: int
    unit: Optional[LaurentPoly]
    modulus: int
    level: Level
    q: int

    @property
    def n(self) -> int:
        return self.invariant.n

    def token(self) -> str:
        parts = [self.invariant.token(), f"m={self.shift}"]
        if self.unit is not None:
            parts.append(f"u={self.unit.render()} mod w^{self.modulus}")
        return "(" + "; ".join(parts) + ")"

    def __str__(self) -> str:
        return self.token()


def _unit_modulus(level: Level, cond: int) -> int:
    if level == Level.HDER:
        return cond
    if level == Level.H1:
        return min(cond, 1)
    return 0


def make_key(invariant: ClassInvariant, shift: int, unit: FieldElem, level: Level, cond: int) -> RefinedKey:
    modulus = _unit_modulus(level, cond)
    truncated = unit.series_truncate(modulus) if modulus else None
    return RefinedKey(invariant, shift, truncated, modulus, level, unit.q)


def refined_key(g: GroupElement, level: Level = Level.HDER) -> RefinedKey:
    nf, witness = normal_form(g)
    inv = class_invariant(nf)
    return make_key(inv, witness.shift, witness.unit, level, stabilizer_det(nf).conductor)


@lru_cache(maxsize=262144)
def key_of_coset(key: CosetPair, level: Level) -> RefinedKey:
    return refined_key(key.to_element(), level)


def coarsen(key: RefinedKey, level: Level) -> RefinedKey:
    """Image of a refined key at a coarser level."""
    if _RANK[level] < _RANK[key.level]:
        raise DomainError(f"cannot refine a {key.level.value} key to {level.value}")
    if level == key.level:
        return key
    cond = stabilizer_det(key.invariant).conductor
    modulus = _unit_modulus(level, cond)
    unit = key.unit.truncate(modulus) if key.unit is not None and modulus else None
    return replace(key, unit=unit, modulus=modulus, level=level)


def project(x: FormalSum, level: Level) -> FormalSum:
    """phi (level H^der), phi_1 or phi_0 of a sum over G/K or over finer keys."""
    def image(key):
        if isinstance(key, CosetPair):
            return key_of_coset(key, level)
        if isinstance(key, RefinedKey):
            return coarsen(key, level)
        raise DomainError(f"cannot project key {key!r}")
    return x.map_keys(image)


def translate_key(key: RefinedKey, d: FieldElem) -> RefinedKey:
    """Key of Delta(h) g for det h = d."""
    unit = key.unit
    if unit is not None:
        unit = (FieldElem.from_poly(unit) * d.unit_part()).series_truncate(key.modulus)
    return replace(key, shift=key.shift + int(d.valuation), unit=unit)


def translate_by_det(x: FormalSum, d: FieldElem) -> FormalSum:
    return x.map_keys(lambda key: translate_key(key, d))


def _h_part(h: Union[Mat, GroupElement]) -> Mat:
    if isinstance(h, Mat):
        return h
    if not is_member(h, SubgroupSpec(SubgroupTag.H)):
        raise DomainError("left translation needs an element of H = Delta(GL_n)")
    return h.g2


def left_translate(h: Union[Mat, GroupElement], x: FormalSum) -> FormalSum:
    """Left multiplication by h in H on sums over G/K or over refined keys."""
    m = _h_part(h)
    element = GroupElement.delta(m)
    d = m.det()
    def image(key):
        if isinstance(key, CosetPair):
            return left_translate_cosets(element, FormalSum.basis(key))
        return FormalSum.basis(translate_key(key, d))
    return x.flat_map(image)


def frobenius(n: int, q: int, k: int = 1) -> GroupElement:
    """Frob^k = Delta(diag(w^k, 1, ..., 1))."""
    return GroupElement.delta(Mat.w_diag([k] + [0] * (n - 1), q))


def frob_translate(x: FormalSum, k: int = 1) -> FormalSum:
    """Left translation by Frob^k at any level."""
    if not x:
        return x
    first = next(iter(x))
    if isinstance(first, CosetPair):
        return left_translate_cosets(frobenius(first.n, first.q, k), x)
    return translate_by_det(x, FieldElem.w_power(k, first.q))


def _refined_sum(x: FormalSum, level: Level) -> int:
    q = None
    for key in x:
        if not isinstance(key, RefinedKey) or key.level != level:
            raise DomainError(f"expected {level.value} keys, got {key!r}")
        q = key.q
    return q


def check_h1_invariant(x: FormalSum) -> None:
    """Raise InvarianceError unless every t in 1 + wO fixes x."""
    if not x:
        return
    q = _refined_sum(x, Level.HDER)
    modulus = max(key.modulus for key in x)
    for digits in itertools.product(range(q), repeat=max(modulus - 1, 0)):
        t = FieldElem.from_poly(LaurentPoly.from_digits((1,) + digits, q))
        if translate_by_det(x, t) != x:
            raise InvarianceError(f"sum is not fixed by det = {t.render()}")


def trace_1_0(x: FormalSum) -> FormalSum:
    """Sum of the translates of an H_1-invariant H^der-sum by diag(lambda, 1, ..., 1), lambda in F_q^x."""
    if not x:
        return FormalSum.zero()
    check_h1_invariant(x)
    q = next(iter(x)).q
    out = FormalSum.sum(translate_by_det(x, FieldElem.from_int(lam, q)) for lam in range(1, q))
    logger.debug(f"Tr_(1,0): {len(x)} keys -> {len(out)} keys")
    return out
