"""
Verification report records shared by every checker, and the helpers that
build and guard them.
"""

from __future__ import annotations

import time
from enum import Enum
from typing import Any, Callable, Dict, List, Optional

from loguru import logger
from pydantic import BaseModel, Field, model_validator

from .errors import HeckeLabError, ResourceError


class CheckStatus(str, Enum):
    """Outcome of a verification."""
    PASS = "PASS"
    PASS_VACUOUS = "PASS-VACUOUS"
    FAIL = "FAIL"
    SKIP = "SKIP"


class Report(BaseModel):
    """Result of one check on one parameter set."""
    check: str
    params: Dict[str, Any] = Field(default_factory=dict)
    status: CheckStatus
    witness: Optional[Dict[str, Any]] = Field(default=None)
    counts: Dict[str, Any] = Field(default_factory=dict)
    millis: int = Field(default=0)
    notes: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _fail_needs_witness(self) -> "Report":
        if self.status == CheckStatus.FAIL and not self.witness:
            raise ValueError(f"FAIL report for {self.check} carries no witness")
        return self

    @property
    def passed(self) -> bool:
        return self.status in (CheckStatus.PASS, CheckStatus.PASS_VACUOUS)

    def sort_key(self):
        return (self.check, sorted((k, str(v)) for k, v in self.params.items()))

    def canonical(self) -> Dict[str, Any]:
        """JSON-ready dict without the timing field."""
        return self.model_dump(mode="json", exclude={"millis"})


def divisibility_status(modulus: int) -> CheckStatus:
    """PASS-VACUOUS when the modulus is 1."""
    return CheckStatus.PASS_VACUOUS if modulus == 1 else CheckStatus.PASS


class Stopwatch:
    """Wall-clock timer for the millis field."""

    def __init__(self):
        self.start = time.perf_counter()

    @property
    def millis(self) -> int:
        return int((time.perf_counter() - self.start) * 1000)


def skip_report(check: str, params: Dict[str, Any], reason: str, millis: int = 0) -> Report:
    logger.warning(f"SKIP {check} {params}: {reason}")
    return Report(check=check, params=params, status=CheckStatus.SKIP, notes=[reason], millis=millis)


def fail_report(check: str, params: Dict[str, Any], witness: Dict[str, Any], millis: int = 0,
                counts: Optional[Dict[str, Any]] = None) -> Report:
    logger.error(f"FAIL {check} {params}: {witness}")
    return Report(check=check, params=params, status=CheckStatus.FAIL, witness=witness,
                  counts=counts or {}, millis=millis)


def guarded(check: str, params: Dict[str, Any], run: Callable[[], Report]) -> Report:
    """Run a checker, turning resource refusals into SKIP and internal errors into FAIL."""
    watch = Stopwatch()
    try:
        return run()
    except ResourceError as e:
        return skip_report(check, params, str(e), watch.millis)
    except (HeckeLabError, AssertionError) as e:
        return fail_report(check, params, {"error": type(e).__name__, "message": str(e)}, watch.millis)
