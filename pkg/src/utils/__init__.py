"""
Utils package
"""

from .config_loader import load_config, default_config, default_jobs
from .exceptions import (
    AlgebraError,
    PresentationSyntaxError,
    ComposabilityError,
    MixedEndpointsError,
    AdmissibilityError,
    DimensionMismatchError,
    ModuleFormatError,
    ModuleExpressionError,
    IncompatibleAlgebraError,
    InvalidOrderingError,
    InvalidIdempotentError,
    UndecidedError,
)
from .verdict import Truth, Verdict, all_of

__all__ = [
    "load_config",
    "default_config",
    "default_jobs",
    "AlgebraError",
    "PresentationSyntaxError",
    "ComposabilityError",
    "MixedEndpointsError",
    "AdmissibilityError",
    "DimensionMismatchError",
    "ModuleFormatError",
    "ModuleExpressionError",
    "IncompatibleAlgebraError",
    "InvalidOrderingError",
    "InvalidIdempotentError",
    "UndecidedError",
    "Truth",
    "Verdict",
    "all_of",
]
