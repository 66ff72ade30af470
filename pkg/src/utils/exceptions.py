"""
Exception hierarchy for malformed input and contract violations.

Mathematical non-decisions are not exceptions; they travel as
``Verdict.undetermined`` values.
"""

from typing import Optional, Sequence


class AlgebraError(Exception):
    """Base class for exceptions raised by the algebra toolkit."""
    pass


class PresentationSyntaxError(AlgebraError):
    """Exception raised when a presentation or structure-constant file cannot be parsed."""
    def __init__(self, line: int, column: int, message: str, source: Optional[str] = None):
        self.line = line
        self.column = column
        self.source = source
        where = f"{source}:" if source else ""
        super().__init__(f"{where}{line}:{column}: {message}")


class ComposabilityError(AlgebraError):
    """Exception raised when a path in a relation is not composable."""
    def __init__(self, path: str, source: Optional[str] = None, line: Optional[int] = None):
        self.path = path
        self.line = line
        where = f"{source}:{line}: " if source and line else ""
        super().__init__(f"{where}path '{path}' is not composable")


class MixedEndpointsError(AlgebraError):
    """Exception raised when the paths of one relation do not share source and target."""
    def __init__(self, relation: str, line: Optional[int] = None):
        self.relation = relation
        self.line = line
        where = f"line {line}: " if line else ""
        super().__init__(f"{where}relation '{relation}' mixes sources or targets")


class AdmissibilityError(AlgebraError):
    """Exception raised when a path of the length bound survives modulo the relations."""
    def __init__(self, path: str, bound: int):
        self.path = path
        self.bound = bound
        super().__init__(f"path '{path}' of length {bound} does not vanish modulo the relations")


class DimensionMismatchError(AlgebraError):
    """Exception raised when matrix or vector shapes disagree."""
    def __init__(self, expected, got, what: str = "dimension"):
        self.expected = expected
        self.got = got
        super().__init__(f"{what} mismatch: expected {expected}, got {got}")


class ModuleFormatError(AlgebraError):
    """Exception raised for malformed module files or invalid action data."""
    def __init__(self, message: str, source: Optional[str] = None, line: Optional[int] = None):
        self.source = source
        self.line = line
        where = ""
        if source:
            where = f"{source}:{line}: " if line else f"{source}: "
        super().__init__(f"{where}{message}")


class ModuleExpressionError(AlgebraError):
    """Exception raised when a command-line module expression cannot be resolved."""
    def __init__(self, expression: str, reason: str):
        self.expression = expression
        super().__init__(f"cannot resolve module expression '{expression}': {reason}")


class IncompatibleAlgebraError(AlgebraError):
    """Exception raised when objects over different algebras are combined."""
    def __init__(self, operation: str):
        super().__init__(f"{operation}: arguments live over different algebras")


class InvalidOrderingError(AlgebraError):
    """Exception raised when an ordering is not a permutation of the simple indices."""
    def __init__(self, ordering: Sequence, count: int):
        self.ordering = tuple(ordering)
        super().__init__(f"ordering {list(ordering)} is not a permutation of 1..{count}")


class InvalidIdempotentError(AlgebraError):
    """Exception raised for idempotent expressions like 'e1+e3' that do not parse."""
    def __init__(self, text: str, reason: str = "unknown vertex"):
        self.text = text
        super().__init__(f"invalid idempotent '{text}': {reason}")


class UndecidedError(Exception):
    """
    Raised by building blocks that cannot decide a question with the
    available methods (radical outside the trace-form window, Fitting
    splitting that does not converge, non-split endomorphism rings).

    Decision procedures catch it and return an undetermined Verdict.
    """
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)
