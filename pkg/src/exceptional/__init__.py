"""
Exceptional sequences, their standardisation into highest weight algebras,
tilting modules and strict fullness
"""

from .sequences import ExceptionalReport, exceptional_check, filt_closure_check
from .standardise import Standardisation, standardise
from .tilting import GENERATION_CRITERION, tilting_check, strictly_full_check

__all__ = [
    "ExceptionalReport",
    "exceptional_check",
    "filt_closure_check",
    "Standardisation",
    "standardise",
    "GENERATION_CRITERION",
    "tilting_check",
    "strictly_full_check",
]
