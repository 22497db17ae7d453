"""
Integer Laurent polynomials in s = q^(1/2).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

from utils import NormalizationError


class SLaurent:
    """Sparse sum of c * s^e with integer c; zero coefficients are dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Dict[int, int] = None):
        self._terms: Dict[int, int] = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "SLaurent":
        return cls({exp: coeff})

    @classmethod
    def constant(cls, coeff: int) -> "SLaurent":
        return cls({0: coeff})

    @property
    def terms(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = SLaurent.constant(other)
        if not isinstance(other, SLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other) -> "SLaurent":
        if isinstance(other, int):
            other = SLaurent.constant(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return SLaurent(acc)

    __radd__ = __add__

    def __neg__(self) -> "SLaurent":
        return SLaurent({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "SLaurent":
        return self + (-other)

    def __mul__(self, other) -> "SLaurent":
        if isinstance(other, int):
            return SLaurent({e: c * other for e, c in self._terms.items()})
        acc: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return SLaurent(acc)

    __rmul__ = __mul__

    def shift(self, exp: int) -> "SLaurent":
        """Multiply by s^exp."""
        return SLaurent({e + exp: c for e, c in self._terms.items()})

    def is_even(self) -> bool:
        return all(e % 2 == 0 for e in self._terms)

    def specialize(self, q: int) -> Fraction:
        """Substitute s^2 = q; odd exponents have no rational value."""
        if not self.is_even():
            raise NormalizationError(f"odd power of s in {self.render()}")
        return sum((Fraction(q) ** (e // 2) * c for e, c in self._terms.items()), Fraction(0))

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.terms:
            body = "" if e == 0 else ("s" if e == 1 else f"s^{e}")
            mag = abs(c)
            text = body if mag == 1 and body else (f"{mag}*{body}" if body else str(mag))
            parts.append(("-" if c < 0 else "+", text))
        out = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SLaurent({self.render()!r})"
