"""Exceptions raised by the algebra engine."""

from typing import Optional


class AlgebraError(ValueError):
    """Base class for all engine errors."""


class ShapeError(AlgebraError):
    """Dimension, arity or argument-count mismatch."""


class ArityError(ShapeError):
    """A checker or construction was handed an algebra of the wrong arity."""


class ScalarError(AlgebraError):
    """Malformed rational literal."""


class SingularMatrixError(AlgebraError):
    """Exact inverse requested for a singular linear map."""


class BudgetExceededError(AlgebraError):
    """Enumeration or materialization would exceed the configured budget."""

    def __init__(self, what: str, required: int, budget: int):
        super().__init__(f"{what}: {required} tuples required, budget is {budget}")
        self.what = what
        self.required = required
        self.budget = budget


class HypothesisError(AlgebraError):
    """A construction refused its input because a hypothesis failed.

    The failing check report (with its witness) is attached so callers can
    show exactly which condition broke.
    """

    def __init__(self, construction: str, hypothesis: str, report: Optional[object] = None):
        detail = f"{construction}: hypothesis '{hypothesis}' failed"
        witness = getattr(report, "witness", None)
        if witness is not None:
            detail += f" ({witness.describe()})"
        super().__init__(detail)
        self.construction = construction
        self.hypothesis = hypothesis
        self.report = report
