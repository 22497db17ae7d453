"""
Operation budget used to refuse enumerations that would exceed a cap.
"""

from __future__ import annotations

from dataclasses import dataclass

from loguru import logger

from .errors import ResourceError


@dataclass
class OperationBudget:
    """Running count of group operations charged against a cap."""
    cap: int
    spent: int = 0

    def require(self, amount: int, what: str) -> None:
        """Fail early if ``amount`` more operations would exceed the cap."""
        if self.spent + amount > self.cap:
            logger.warning(f"Refusing {what}: needs {amount} operations, cap {self.cap}, spent {self.spent}")
            raise ResourceError(f"{what} needs {amount} operations, over the cap of {self.cap}")

    def charge(self, amount: int, what: str) -> None:
        self.require(amount, what)
        self.spent += amount

    @property
    def remaining(self) -> int:
        return self.cap - self.spent
