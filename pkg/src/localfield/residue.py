"""
The residue field F_q of the valuation ring, for prime q.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympy import isprime
from sympy.ntheory import primitive_root as _sympy_primitive_root

from utils import DomainError


def check_prime(q: int) -> int:
    """Return ``q`` unchanged if it is a prime, else raise DomainError."""
    if not isinstance(q, int) or not isprime(q):
        raise DomainError(f"residue characteristic must be prime, got {q!r}")
    return q


@lru_cache(maxsize=None)
def primitive_root(q: int) -> int:
    """Generator of the cyclic group F_q^x."""
    check_prime(q)
    if q == 2:
        return 1
    return int(_sympy_primitive_root(q))


def inverse_mod(value: int, q: int) -> int:
    value %= q
    if value == 0:
        raise DomainError(f"0 has no inverse modulo {q}")
    return pow(value, -1, q)


@dataclass(frozen=True)
class ResidueScalar:
    """An element of F_q."""
    value: int
    q: int

    def __post_init__(self):
        check_prime(self.q)
        object.__setattr__(self, "value", self.value % self.q)

    def _coerce(self, other) -> int:
        if isinstance(other, ResidueScalar):
            if other.q != self.q:
                raise DomainError(f"cannot combine residues modulo {self.q} and {other.q}")
            return other.value
        if isinstance(other, int):
            return other % self.q
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else ResidueScalar(self.value + v, self.q)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else ResidueScalar(self.value - v, self.q)

    def __rsub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else ResidueScalar(v - self.value, self.q)

    def __mul__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else ResidueScalar(self.value * v, self.q)

    __rmul__ = __mul__

    def __neg__(self):
        return ResidueScalar(-self.value, self.q)

    def inverse(self) -> "ResidueScalar":
        return ResidueScalar(inverse_mod(self.value, self.q), self.q)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return ResidueScalar(self.value * inverse_mod(v, self.q), self.q)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)
