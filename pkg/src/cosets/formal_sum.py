"""
Finitely supported formal sums over hashable basis keys.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Dict, Hashable, Iterable, Iterator, List, Tuple

Coefficient = Any


class FormalSum:
    """Sum of coefficient * [key]; zero coefficients are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Dict[Hashable, Coefficient] = None):
        self._terms: Dict[Hashable, Coefficient] = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    self._terms[key] = coeff

    @classmethod
    def zero(cls) -> "FormalSum":
        return cls()

    @classmethod
    def basis(cls, key: Hashable, coeff: Coefficient = 1) -> "FormalSum":
        return cls({key: coeff})

    @classmethod
    def sum(cls, sums: Iterable["FormalSum"]) -> "FormalSum":
        acc: Dict[Hashable, Coefficient] = {}
        for s in sums:
            for key, coeff in s._terms.items():
                acc[key] = acc.get(key, 0) + coeff
        return cls(acc)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[Hashable, Coefficient]]) -> "FormalSum":
        acc: Dict[Hashable, Coefficient] = {}
        for key, coeff in pairs:
            acc[key] = acc.get(key, 0) + coeff
        return cls(acc)

    def __getitem__(self, key: Hashable) -> Coefficient:
        return self._terms.get(key, 0)

    def __contains__(self, key: Hashable) -> bool:
        return key in self._terms

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def __add__(self, other: "FormalSum") -> "FormalSum":
        return FormalSum.sum([self, other])

    def __neg__(self) -> "FormalSum":
        return FormalSum({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def __rmul__(self, alpha: Coefficient) -> "FormalSum":
        if not alpha:
            return FormalSum()
        return FormalSum({k: alpha * c for k, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def map_keys(self, fn: Callable[[Hashable], Hashable]) -> "FormalSum":
        """Push forward along a key map, merging coefficients additively."""
        return FormalSum.from_pairs((fn(k), c) for k, c in self._terms.items())

    def flat_map(self, fn: Callable[[Hashable], "FormalSum"]) -> "FormalSum":
        """Linear extension of a map from keys to sums."""
        acc: Dict[Hashable, Coefficient] = {}
        for key, coeff in self._terms.items():
            for k2, c2 in fn(key).items():
                acc[k2] = acc.get(k2, 0) + coeff * c2
        return FormalSum(acc)

    def total_mass(self) -> Coefficient:
        return sum(self._terms.values(), 0)

    def sorted_items(self) -> List[Tuple[Hashable, Coefficient]]:
        return sorted(self._terms.items(), key=lambda kv: _token(kv[0]))

    def to_report(self) -> List[List[str]]:
        """Sorted [token, coefficient] pairs for JSON reports."""
        return [[_token(k), _render_coeff(c)] for k, c in self.sorted_items()]

    def __repr__(self) -> str:
        inner = ", ".join(f"{_render_coeff(c)}*{_token(k)}" for k, c in self.sorted_items())
        return f"FormalSum({inner})"


def _token(key: Hashable) -> str:
    token = getattr(key, "token", None)
    return token() if callable(token) else str(key)


def _render_coeff(c: Coefficient) -> str:
    if isinstance(c, Fraction) and c.denominator == 1:
        return str(c.numerator)
    return str(c)
