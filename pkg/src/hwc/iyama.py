"""
Quasi-hereditary endomorphism rings from radical chains: for M with
M ⊋ 𝔯M ⊋ 𝔯²M ⊋ ... ⊋ 0, End(⊕_t 𝔯^t M) is quasi-hereditary.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List

from src.algebra import Algebra
from src.modcat import Module, decompose, direct_sum, endomorphism_algebra, hom_dimension, iyama_chain
from src.utils.exceptions import UndecidedError
from src.utils.verdict import Verdict
from .chain import qh_search
from .ordering import Ordering

logger = logging.getLogger(__name__)


@dataclass
class IyamaResult:
    """
    Attributes:
        chain: M, 𝔯M, 𝔯²M, ... (nonzero terms)
        full_dim: dim End(⊕ chain)
        gamma: the basic endomorphism algebra of ⊕ chain
        orderings: admissible orderings of gamma
        verdict: gamma is quasi-hereditary
    """
    chain: List[Module]
    full_dim: int
    gamma: Algebra
    orderings: List[Ordering]
    verdict: Verdict

    def to_dict(self) -> Dict[str, Any]:
        return {
            "chain_dims": [m.dim for m in self.chain],
            "chain_dimension_vectors": [list(m.dims) for m in self.chain],
            "full_endomorphism_dim": self.full_dim,
            "gamma_dim": self.gamma.dim,
            "gamma_simples": self.gamma.n_vertices,
            "orderings": [o.labels(self.gamma) for o in self.orderings],
            **self.verdict.to_dict(),
        }


def iyama(a: Algebra, x: Module, jobs: int = 1, max_simples: int = 8) -> IyamaResult:
    """
    Raises:
        UndecidedError: a radical or decomposition along the way is not computable
    """
    chain = iyama_chain(x)
    total = direct_sum(chain, "⊕𝔯^t" + x.name).module
    pieces = [p.module for p in decompose(total).pieces]
    full_dim = sum(hom_dimension(p, q) for p in pieces for q in pieces)
    gamma = endomorphism_algebra(total, basic=True).algebra
    logger.debug(f"Iyama construction on {x.name} over {a.name}: chain {[m.dim for m in chain]}, "
                 f"End dim {full_dim}, basic dim {gamma.dim}")
    try:
        orderings = qh_search(gamma, jobs, max_simples)
    except UndecidedError as e:
        return IyamaResult(chain, full_dim, gamma, [], Verdict.undetermined(e.reason))
    verdict = Verdict.of(bool(orderings),
                         "endomorphism ring is quasi-hereditary" if orderings else "no admissible ordering",
                         {"admissible": len(orderings)})
    return IyamaResult(chain, full_dim, gamma, orderings, verdict)
