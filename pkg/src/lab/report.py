"""
Ordering and persistence of verification reports.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, List, Union

from loguru import logger

from utils import Report


def sort_reports(reports: Iterable[Report]) -> List[Report]:
    return sorted(reports, key=lambda r: r.sort_key())


def reports_json(reports: Iterable[Report]) -> str:
    """Deterministic JSON of the parameter-sorted reports."""
    return json.dumps([r.canonical() for r in sort_reports(reports)], sort_keys=True, indent=2)


def write_reports(reports: Iterable[Report], path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(reports_json(reports) + "\n")
    logger.info(f"Wrote reports to {path}")
    return path
