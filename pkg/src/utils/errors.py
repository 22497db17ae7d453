"""
Exception hierarchy shared by every HeckeLab package.

Library code raises these; only the verifiers in ``lab`` and the CLI turn
them into report statuses or exit codes.
"""

from __future__ import annotations


class HeckeLabError(Exception):
    """Base class for all HeckeLab errors."""


class DomainError(HeckeLabError, ValueError):
    """An input lies outside the domain of an operation."""


class CoefficientError(HeckeLabError):
    """A symbolic coefficient cannot be evaluated in the requested ring."""


class NormalizationError(HeckeLabError):
    """A Hecke coefficient carries an odd power of s = q^(1/2)."""


class InvarianceError(HeckeLabError):
    """An input expected to be fixed by a subgroup is not."""


class ResourceError(HeckeLabError):
    """An enumeration would exceed the configured operation cap."""


class InternalError(HeckeLabError):
    """A structural identity that must hold was violated."""
