"""
Canonical identifiers of cosets gK.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from localfield import FieldElem, LaurentPoly

from .matrix import GroupElement, Mat
from .reduction import hermite_entries, hermite_reduce

Entry = Tuple[int, int, LaurentPoly]


@dataclass(frozen=True)
class CosetKey:
    """Column-Hermite data of gK: diagonal exponents and reduced upper entries."""
    exponents: Tuple[int, ...]
    entries: Tuple[Entry, ...]
    q: int

    @property
    def size(self) -> int:
        return len(self.exponents)

    @property
    def det_valuation(self) -> int:
        return sum(self.exponents)

    def token(self) -> str:
        """Stable text form, e.g. ``[e=1,0; u12=1+2*w]`` with 1-based positions."""
        parts = ["e=" + ",".join(str(e) for e in self.exponents)]
        parts.extend(f"u{i + 1}{j + 1}={poly.render()}" for i, j, poly in self.entries)
        return "[" + "; ".join(parts) + "]"

    def to_matrix(self) -> Mat:
        """The upper-triangular Hermite representative."""
        return _representative(self)

    def __str__(self) -> str:
        return self.token()


@lru_cache(maxsize=65536)
def _representative(key: CosetKey) -> Mat:
    q = key.q
    rows = Mat.w_diag(key.exponents, q).to_lists()
    for i, j, poly in key.entries:
        rows[i][j] = FieldElem.from_poly(poly)
    return Mat(tuple(tuple(r) for r in rows), q)


@dataclass(frozen=True)
class CosetPair:
    """Key of a coset (g1, g2) K in GL_{n+1}(F) x GL_n(F)."""
    first: CosetKey
    second: CosetKey

    @property
    def n(self) -> int:
        return self.second.size

    @property
    def q(self) -> int:
        return self.first.q

    def token(self) -> str:
        return f"{self.first.token()} x {self.second.token()}"

    def to_element(self) -> GroupElement:
        return GroupElement(self.first.to_matrix(), self.second.to_matrix())

    def __str__(self) -> str:
        return self.token()


def coset_canonical_form(g: Mat) -> CosetKey:
    """Canonical key of gK; equal keys exactly when the column lattices agree."""
    exps, reduced = hermite_reduce(g)
    return CosetKey(exps, hermite_entries(reduced), g.q)


def coset_pair_key(g: GroupElement) -> CosetPair:
    return CosetPair(coset_canonical_form(g.g1), coset_canonical_form(g.g2))
