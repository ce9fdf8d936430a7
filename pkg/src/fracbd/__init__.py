"""Fractional linear birth and death processes.

Exact state distributions and means driven by the Mittag-Leffler function,
the fractional-calculus operators behind them, Monte Carlo via the inverse
stable subordinator, the mapping of aftershock-cascade (ETAS) rate equations
onto fractional relaxation, and a growth-curve fitting front end.
"""

from .errors import (
    DomainError,
    EvaluationOverflowError,
    FracbdError,
    PrecisionLossError,
    RunawayPathError,
    StepSizeError,
)
from .special import (
    FractionalOrder,
    MlBranch,
    MlfEvaluation,
    log_gamma,
    mittag_leffler,
    mittag_leffler_asymptotic_tail,
    mittag_leffler_values,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "EvaluationOverflowError",
    "FracbdError",
    "FractionalOrder",
    "MlBranch",
    "MlfEvaluation",
    "PrecisionLossError",
    "RunawayPathError",
    "StepSizeError",
    "log_gamma",
    "mittag_leffler",
    "mittag_leffler_asymptotic_tail",
    "mittag_leffler_values",
]
