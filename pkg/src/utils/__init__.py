from .errors import (
    HeckeLabError,
    DomainError,
    CoefficientError,
    NormalizationError,
    InvarianceError,
    ResourceError,
    InternalError,
)
from .budget import OperationBudget
from .logging_setup import configure_logging
from .report import (
    CheckStatus,
    Report,
    Stopwatch,
    divisibility_status,
    fail_report,
    guarded,
    skip_report,
)

__all__ = [
    "HeckeLabError",
    "DomainError",
    "CoefficientError",
    "NormalizationError",
    "InvarianceError",
    "ResourceError",
    "InternalError",
    "OperationBudget",
    "configure_logging",
    "CheckStatus",
    "Report",
    "Stopwatch",
    "divisibility_status",
    "fail_report",
    "guarded",
    "skip_report",
]
