"""
Tilting modules and strictly full exceptional sequences.

Generation of the derived category is replaced by counting: a module of
finite projective dimension without self-extensions is tilting exactly when
it has as many non-isomorphic indecomposable summands as there are simples.
"""

import logging
from typing import Optional, Sequence

from src.homalg import ext_dim, min_resolution
from src.modcat import Module, decompose
from src.utils.exceptions import UndecidedError
from src.utils.verdict import Verdict
from .sequences import exceptional_check
from .standardise import standardise

logger = logging.getLogger(__name__)

GENERATION_CRITERION = "summand count equals the number of simples"


def tilting_check(t: Module, cap: Optional[int] = None, resolution_cap: int = 32) -> Verdict:
    """
    pd(T) finite, Ext^p(T, T) = 0 for 0 < p <= pd(T), and the generation
    surrogate. With ``cap`` below pd(T) only degrees up to ``cap`` are
    checked and a true verdict is conditional.
    """
    res = min_resolution(t, resolution_cap)
    if not res.terminated:
        return Verdict.undetermined(f"pd({t.name}) exceeds the resolution cap {resolution_cap}")
    pd = res.length
    top = pd if cap is None else min(pd, cap)
    try:
        for p in range(1, top + 1):
            value = ext_dim(t, t, p, resolution_cap)
            if value:
                return Verdict.false(f"Ext^{p}({t.name}, {t.name}) = {value}",
                                     {"degree": p, "dim": value, "pd": pd})
        summands = decompose(t).basic_count
    except UndecidedError as e:
        return Verdict.undetermined(e.reason)
    simples = t.algebra.n_vertices
    witness = {"pd": pd, "summands": summands, "simples": simples, "generation_criterion": GENERATION_CRITERION}
    if summands != simples:
        return Verdict.false(f"{summands} indecomposable summands for {simples} simples", witness)
    verdict = Verdict.true(f"{t.name} is tilting", witness)
    return verdict.with_cap(cap) if top < pd else verdict


def strictly_full_check(seq: Sequence[Module], cap: Optional[int] = None, resolution_cap: int = 32) -> Verdict:
    """
    An exceptional sequence is strictly full when the projective generator
    of its Filt category is tilting in the ambient category.
    """
    report = exceptional_check(seq, cap, resolution_cap)
    if not report.exceptional.is_true:
        return report.exceptional
    try:
        std = standardise(seq, resolution_cap)
    except UndecidedError as e:
        return Verdict.undetermined(e.reason)
    if std.generator is None:
        return std.verdict
    verdict = tilting_check(std.generator, cap, resolution_cap).with_cap(report.exceptional.cap)
    logger.info(f"Strict fullness of {[m.name for m in report.sequence]}: {verdict.truth.value}")
    if verdict.is_true:
        return verdict.with_witness(highest_weight=std.to_dict())
    return verdict
