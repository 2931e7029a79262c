"""Classify a sequence as increasing, decreasing or neither."""

from collections import namedtuple
from enum import Enum

import numpy as np

from conebound.errors import SizeError

MonotonicityReport = namedtuple(
    "MonotonicityReport",
    ["values", "verdict", "first_violation_index", "claim_citation"],
    module="conebound.analysis",
)


class Trend(Enum):
    """Direction of a sequence."""

    INCREASING = "increasing"
    DECREASING = "decreasing"
    NEITHER = "neither"


def monotonicity_verdict(values, tol: float = 1e-12, claim_citation: str = None) -> MonotonicityReport:
    """
    Compare consecutive terms with an absolute tolerance on their differences.

    Differences within tol count as ties, so a sequence of ties is Increasing.
    For Neither, first_violation_index is the 0-based index of the first term
    that breaks the direction set by the first difference beyond tol.
    Args:
        values (array): At least two terms
        tol (float): Absolute tolerance on differences
        claim_citation (str): The published claim this check concerns
    Returns (MonotonicityReport): The verdict
    """
    values = np.asarray(values, dtype=float)
    if values.size < 2:
        raise SizeError(f"Error! A monotonicity check needs at least two values (got {values.size}).")

    differences = np.diff(values)
    if np.all(differences >= -tol):
        return MonotonicityReport(values, Trend.INCREASING, None, claim_citation)
    if np.all(differences <= tol):
        return MonotonicityReport(values, Trend.DECREASING, None, claim_citation)

    leading = differences[np.abs(differences) > tol][0]
    against = differences < -tol if leading > 0 else differences > tol
    first = int(np.flatnonzero(against)[0]) + 1

    return MonotonicityReport(values, Trend.NEITHER, first, claim_citation)
