"""Days-on/days-off scheduling: polynomial solvers, certificates, hard instances and an exact oracle."""

from .core import (
    Bounds,
    ComplexityClass,
    DodospError,
    FeasibilityReport,
    Infeasible,
    Instance,
    InvalidInstance,
    Schedule,
    ScheduleShapeError,
    Shift,
    SizeLimitExceeded,
    Violation,
    apply_defaults,
    check_fifo,
    check_schedule,
    classify_instance,
    periods,
)
from .solver import SolveResult, decide, solve

__all__ = [
    "Bounds",
    "ComplexityClass",
    "DodospError",
    "FeasibilityReport",
    "Infeasible",
    "Instance",
    "InvalidInstance",
    "Schedule",
    "ScheduleShapeError",
    "Shift",
    "SizeLimitExceeded",
    "SolveResult",
    "Violation",
    "apply_defaults",
    "check_fifo",
    "check_schedule",
    "classify_instance",
    "decide",
    "periods",
    "solve",
]
