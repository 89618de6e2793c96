"""Hypothesis gating shared by the constructions."""

import logging
from typing import Callable

from algebra.core.reports import CheckReport
from algebra.errors import HypothesisError

logger = logging.getLogger(__name__)


def require(construction: str, hypothesis: str, check: Callable[[], CheckReport]) -> CheckReport:
    """Run ``check`` and refuse the construction when it fails."""
    report = check()
    if not report.passed:
        logger.error(f"{construction} refused: {hypothesis} failed")
        raise HypothesisError(construction, hypothesis, report)
    logger.debug(f"{construction}: {hypothesis} holds ({report.tuples_checked} tuples)")
    return report


def warn_unchecked(construction: str) -> None:
    logger.warning(f"{construction}: hypotheses not checked, output is only as valid as its input")
