"""
The radical 𝔯M = Σ_{φ ∈ J(End M)} im φ and the chain M ⊋ 𝔯M ⊋ 𝔯²M ⊋ ... .
"""

import logging
from typing import List, Tuple

from src.algebra import radical
from src.kernel import Subspace
from src.utils.exceptions import AlgebraError
from .calculus import submodule_from_space
from .endomorphism import endomorphism_algebra
from .module import Module, ModuleMap

logger = logging.getLogger(__name__)


def iyama_radical(m: Module) -> Tuple[Module, ModuleMap]:
    """
    𝔯M with its inclusion into M.

    Raises:
        UndecidedError: J(End M) is not computable
    """
    if m.dim == 0:
        return submodule_from_space(m, Subspace.zero(0, m.field), f"𝔯{m.name}")
    end = endomorphism_algebra(m)
    j = radical(end.algebra)
    rows = []
    for x in j.vectors():
        rows.extend(end.endomorphism(x).matrix.row_vectors())
    space = Subspace.span(rows, m.dim, m.field)
    logger.debug(f"𝔯{m.name}: dim {space.dim} of {m.dim}")
    return submodule_from_space(m, space, f"𝔯{m.name}")


def iyama_chain(m: Module) -> List[Module]:
    """M, 𝔯M, 𝔯²M, ... down to (excluding) zero."""
    chain: List[Module] = []
    current = m
    while current.dim:
        chain.append(current)
        nxt, _ = iyama_radical(current)
        if nxt.dim >= current.dim:
            raise AlgebraError(f"radical chain of {m.name} does not descend at {current.name}")
        current = nxt
    return chain
