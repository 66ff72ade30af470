"""
Simple modules as tops of the indecomposable projectives.
"""

import logging
from typing import List

from src.algebra import Algebra
from .calculus import top
from .module import Module, projective_module

logger = logging.getLogger(__name__)


def simple_module(a: Algebra, v: int) -> Module:
    """S_v = top(P_v); one-dimensional at vertex v for split algebras."""
    return simple_modules(a)[v]


def simple_modules(a: Algebra) -> List[Module]:
    def build():
        simples = []
        for v in range(a.n_vertices):
            s, _ = top(projective_module(a, v))
            simples.append(s.renamed(f"S{a.vertex_labels[v]}"))
        logger.debug(f"Simple modules of '{a.name}': dims {[s.dim for s in simples]}")
        return simples
    return a.cache("simples", build)
