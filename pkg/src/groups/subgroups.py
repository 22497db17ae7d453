"""
Membership predicates for the compact and diagonal subgroups of the split setting.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from localfield import FieldElem
from utils import DomainError

from .matrix import GroupElement, Mat, embed_iota


class SubgroupTag(str, Enum):
    """Subgroups with a decidable membership test."""
    K = "K"
    IWAHORI = "I"
    IWAHORI_PLUS = "I+"
    H = "H"
    H_DER = "Hder"
    H_C = "Hc"
    DELTA_K2 = "DeltaK2"


@dataclass(frozen=True)
class SubgroupSpec:
    """A subgroup tag plus the level c for H_c."""
    tag: SubgroupTag
    c: Optional[int] = None

    def __post_init__(self):
        if self.tag == SubgroupTag.H_C and (self.c is None or self.c < 0):
            raise DomainError(f"H_c needs a level c >= 0, got {self.c}")

    @classmethod
    def h_c(cls, c: int) -> "SubgroupSpec":
        return cls(SubgroupTag.H_C, c)


def _in_k(g: Mat) -> bool:
    if any(not x.is_integral() for row in g.rows for x in row):
        return False
    return g.det().valuation == 0


def _in_iwahori(g: Mat) -> bool:
    if not _in_k(g):
        return False
    return all(g[i, j].valuation >= 1 for i in range(g.size) for j in range(i))


def _in_iwahori_plus(g: Mat) -> bool:
    for i in range(g.size):
        for j in range(g.size):
            x = g[i, j]
            if i == j and not x.is_one():
                return False
            if i > j and not x.is_zero():
                return False
            if i < j and not x.is_integral():
                return False
    return True


def det_in_level(d: FieldElem, c: int) -> bool:
    """det in O^x for c = 0, det in 1 + w^c O for c >= 1."""
    if c == 0:
        return d.valuation == 0
    return (d - FieldElem.one(d.q)).valuation >= c


def _h_factor(g: Union[Mat, GroupElement]) -> Optional[Mat]:
    """The GL_n component when g lies in H = Delta(GL_n), else None."""
    if isinstance(g, Mat):
        return g
    if g.g1 != embed_iota(g.g2):
        return None
    return g.g2


def is_member(g: Union[Mat, GroupElement], spec: SubgroupSpec) -> bool:
    """Decide membership; a bare Mat stands for one factor (K, I, I+) or for h in GL_n (H tags)."""
    tag = spec.tag
    if tag in (SubgroupTag.K, SubgroupTag.IWAHORI, SubgroupTag.IWAHORI_PLUS):
        test = {SubgroupTag.K: _in_k, SubgroupTag.IWAHORI: _in_iwahori,
                SubgroupTag.IWAHORI_PLUS: _in_iwahori_plus}[tag]
        if isinstance(g, Mat):
            return test(g)
        return test(g.g1) and test(g.g2)
    h = _h_factor(g)
    if h is None:
        return False
    if tag == SubgroupTag.H:
        return True
    if tag == SubgroupTag.H_DER:
        return h.det().is_one()
    if tag == SubgroupTag.H_C:
        return det_in_level(h.det(), spec.c)
    if tag == SubgroupTag.DELTA_K2:
        return _in_k(h)
    raise DomainError(f"unknown subgroup tag {tag}")
