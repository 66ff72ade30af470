"""
Three-valued results returned by every decision procedure.
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Dict, Iterable, Optional


class Truth(str, Enum):
    TRUE = "true"
    FALSE = "false"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class Verdict:
    """
    A decision together with the evidence for it.

    Attributes:
        truth: true / false / undetermined
        reason: short human explanation (the failing axiom, the missing hypothesis, ...)
        witness: JSON-ready data backing the answer
        cap: set when vanishing was only certified up to this degree
    """
    truth: Truth
    reason: str = ""
    witness: Dict[str, Any] = field(default_factory=dict)
    cap: Optional[int] = None

    @classmethod
    def true(cls, reason: str = "", witness: Optional[Dict[str, Any]] = None,
             cap: Optional[int] = None) -> "Verdict":
        return cls(Truth.TRUE, reason, dict(witness or {}), cap)

    @classmethod
    def false(cls, reason: str, witness: Optional[Dict[str, Any]] = None) -> "Verdict":
        return cls(Truth.FALSE, reason, dict(witness or {}))

    @classmethod
    def undetermined(cls, reason: str, witness: Optional[Dict[str, Any]] = None) -> "Verdict":
        return cls(Truth.UNDETERMINED, reason, dict(witness or {}))

    @classmethod
    def of(cls, flag: bool, reason: str = "", witness: Optional[Dict[str, Any]] = None) -> "Verdict":
        return cls.true(reason, witness) if flag else cls.false(reason, witness)

    @property
    def is_true(self) -> bool:
        return self.truth is Truth.TRUE

    @property
    def is_false(self) -> bool:
        return self.truth is Truth.FALSE

    @property
    def is_undetermined(self) -> bool:
        return self.truth is Truth.UNDETERMINED

    @property
    def conditional(self) -> bool:
        """True verdicts that hold only up to a degree cap."""
        return self.is_true and self.cap is not None

    def with_witness(self, **extra: Any) -> "Verdict":
        merged = dict(self.witness)
        merged.update(extra)
        return replace(self, witness=merged)

    def with_cap(self, cap: Optional[int]) -> "Verdict":
        if cap is None or not self.is_true:
            return self
        if self.cap is not None:
            cap = min(cap, self.cap)
        return replace(self, cap=cap)

    def exit_code(self) -> int:
        return {Truth.TRUE: 0, Truth.FALSE: 1, Truth.UNDETERMINED: 2}[self.truth]

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"verdict": self.truth.value}
        if self.reason:
            data["reason"] = self.reason
        if self.cap is not None:
            data["conditional_to_cap"] = self.cap
        if self.witness:
            data["witness"] = self.witness
        return data

    def __str__(self) -> str:
        text = self.truth.value
        if self.cap is not None and self.is_true:
            text += f" (to cap {self.cap})"
        if self.reason:
            text += f": {self.reason}"
        return text


def all_of(verdicts: Iterable[Verdict], reason: str = "") -> Verdict:
    """
    Conjunction: the first false wins, then the first undetermined; caps are
    carried over to the combined true verdict.
    """
    pending: Optional[Verdict] = None
    cap: Optional[int] = None
    for v in verdicts:
        if v.is_false:
            return v
        if v.is_undetermined and pending is None:
            pending = v
        if v.is_true and v.cap is not None:
            cap = v.cap if cap is None else min(cap, v.cap)
    if pending is not None:
        return pending
    return Verdict.true(reason, cap=cap)
