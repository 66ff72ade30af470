"""
Minimal projective resolutions.

    ... -> P_2 -> P_1 -> P_0 -> M -> 0

P_k is the projective cover of the k-th syzygy Ω^k (Ω^0 = M) and
Ω^{k+1} is the kernel of that cover, included in P_k. The computation is
lazy and cached on the module; ``min_resolution`` returns a snapshot up to
the requested cap.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.modcat import Module, ModuleMap, cover_multiplicities, kernel, projective_cover
from src.utils.exceptions import UndecidedError

logger = logging.getLogger(__name__)


class _Builder:
    def __init__(self, m: Module):
        self.module = m
        self.covers: List[ModuleMap] = []
        # syzygies[k] = (Ω^k, inclusion into P_{k-1}); Ω^0 = M has no inclusion
        self.syzygies: List[Tuple[Module, Optional[ModuleMap]]] = [(m, None)]
        self.terminated = m.dim == 0

    def ensure(self, k: int):
        """Compute covers up to P_k unless the resolution stops earlier."""
        while len(self.covers) <= k and not self.terminated:
            omega, _ = self.syzygies[-1]
            cover = projective_cover(omega)
            self.covers.append(cover)
            idx = len(self.covers)
            ker, inc = kernel(cover, f"Ω{idx}({self.module.name})")
            self.syzygies.append((ker, inc))
            logger.debug(f"Resolution of {self.module.name}: P_{idx - 1} dims {list(cover.source.dims)}, Ω^{idx} dim {ker.dim}")
            if ker.dim == 0:
                self.terminated = True


@dataclass
class Resolution:
    """
    Attributes:
        module: the resolved module
        covers: π_k: P_k -> Ω^k for the computed degrees
        syzygies: (Ω^k, Ω^k -> P_{k-1}) for k = 0..len(covers)
        terminated: the last syzygy is zero
        cap: highest degree requested
    """
    module: Module
    covers: List[ModuleMap]
    syzygies: List[Tuple[Module, Optional[ModuleMap]]]
    terminated: bool
    cap: int

    @property
    def projectives(self) -> List[Module]:
        return [c.source for c in self.covers]

    def differential(self, k: int) -> ModuleMap:
        """d_k: P_k -> P_{k-1} (k >= 1), or the augmentation P_0 -> M for k = 0."""
        cover = self.covers[k]
        if k == 0:
            return cover
        return cover.then(self.syzygies[k][1])

    def syzygy(self, k: int) -> Tuple[Module, Optional[ModuleMap]]:
        """Ω^k with its inclusion into P_{k-1}; zero beyond the end of a terminated resolution."""
        if k < len(self.syzygies):
            return self.syzygies[k]
        if self.terminated:
            return self.syzygies[-1]
        raise UndecidedError(f"resolution of {self.module.name} not computed to degree {k} (cap {self.cap})")

    @property
    def length(self) -> Optional[int]:
        """Projective dimension when the resolution terminated."""
        if not self.terminated:
            return None
        return max(len(self.covers) - 1, 0)

    def multiplicities(self, k: int) -> List[int]:
        """How often each P_v occurs in P_k."""
        a = self.module.algebra
        if k >= len(self.covers):
            return [0] * a.n_vertices
        return cover_multiplicities(self.syzygies[k][0])


def _builder(m: Module) -> _Builder:
    return m.cache("resolution_builder", lambda: _Builder(m))


def min_resolution(m: Module, cap: int) -> Resolution:
    """Minimal projective resolution up to P_cap or termination."""
    if cap < 0:
        raise ValueError("resolution cap must be non-negative")
    b = _builder(m)
    b.ensure(cap)
    n = min(len(b.covers), cap + 1)
    terminated = b.terminated and n == len(b.covers)
    if not terminated:
        logger.debug(f"Resolution of {m.name} hit cap {cap}")
    return Resolution(m, b.covers[:n], b.syzygies[:n + 1], terminated, cap)
