"""Exception types shared by every module.

The split mirrors how callers are expected to react: bad inputs
(:class:`DomainError`), results that do not fit in a double
(:class:`EvaluationOverflowError`, which still reports the magnitude), loss
of all significant digits (:class:`PrecisionLossError`), and numerical
scheme breakdown (:class:`StepSizeError`, :class:`RunawayPathError`).
"""

from __future__ import annotations


class FracbdError(Exception):
    """Base class for all library errors."""


class DomainError(FracbdError, ValueError):
    """An argument lies outside the documented domain of an operation."""


class EvaluationOverflowError(FracbdError, ArithmeticError):
    """The result exceeds the representable double range.

    ``log_scale`` carries the natural log of the (positive) result so the
    caller still learns the magnitude instead of receiving ``inf``.
    """

    def __init__(self, message: str, log_scale: float):
        super().__init__(f"{message} (natural-log scale {log_scale:.6g})")
        self.log_scale = float(log_scale)


class PrecisionLossError(FracbdError, ArithmeticError):
    """Cancellation or a term cap would leave no trustworthy digits."""


class StepSizeError(FracbdError, ValueError):
    """A marching scheme rejected the grid step (singular implicit update)."""


class RunawayPathError(FracbdError, RuntimeError):
    """A simulated path exceeded its configured maximum length."""
