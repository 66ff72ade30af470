"""
Projective and global dimension.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional

from src.algebra import Algebra
from src.modcat import Module, simple_modules
from .resolution import min_resolution

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomologicalDimension:
    """A dimension, or None when the resolution hit the cap first."""
    value: Optional[int]
    cap: int

    @property
    def determined(self) -> bool:
        return self.value is not None

    def to_dict(self) -> Dict[str, object]:
        if self.value is None:
            return {"value": None, "undetermined_beyond_cap": self.cap}
        return {"value": self.value}

    def __str__(self) -> str:
        return str(self.value) if self.value is not None else f"> {self.cap} (undetermined)"


def default_degree_cap(a: Algebra) -> int:
    """2n - 1 for n simples: beyond it Ext between simples vanishes for highest weight categories."""
    return max(2 * a.n_vertices - 1, 1)


def projective_dimension(m: Module, cap: int = 32) -> HomologicalDimension:
    res = min_resolution(m, cap)
    return HomologicalDimension(res.length, cap)


def global_dimension(a: Algebra, cap: int = 32) -> HomologicalDimension:
    """Maximum of the projective dimensions of the simples."""
    best = 0
    for s in simple_modules(a):
        pd = projective_dimension(s, cap)
        if not pd.determined:
            logger.warning(f"Global dimension of {a.name}: pd {s.name} exceeds cap {cap}")
            return HomologicalDimension(None, cap)
        best = max(best, pd.value)
    return HomologicalDimension(best, cap)
