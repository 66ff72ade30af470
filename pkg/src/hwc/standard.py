"""
Standard modules of an ordering and membership in Filt(Δ) by peeling.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from src.algebra import Algebra, is_division_ring
from src.modcat import (
    Module,
    ModuleMap,
    cokernel,
    endomorphism_algebra,
    evaluation_map,
    hom_dimension,
    projective_module,
    quotient_module,
    submodule_from_space,
    sum_of_images,
    hom_space,
)
from src.utils.exceptions import UndecidedError
from src.utils.verdict import Verdict
from .ordering import Ordering

logger = logging.getLogger(__name__)


def _higher_trace(a: Algebra, ordering: Ordering, v: int):
    """Σ of the images of P_w -> P_v over the vertices w of larger weight."""
    p = projective_module(a, v)
    maps = []
    for w in ordering.higher(v):
        maps.extend(hom_space(projective_module(a, w), p))
    return p, sum_of_images(p, maps)


def standard_modules(a: Algebra, ordering: Ordering) -> List[Module]:
    """Δ_v = P_v / Σ_{w > v} tr_{P_w}(P_v), listed in the order of ``ordering``."""
    out = []
    for v in ordering:
        p, space = _higher_trace(a, ordering, v)
        delta, _ = quotient_module(p, space, f"Δ{a.vertex_labels[v]}")
        out.append(delta)
    logger.debug(f"Standard modules of {a.name} for {ordering.format(a)}: dims {[d.dim for d in out]}")
    return out


def standard_sequences(a: Algebra, ordering: Ordering) -> List[Tuple[ModuleMap, ModuleMap]]:
    """0 -> U_v -> P_v -> Δ_v -> 0 for every v, in the order of ``ordering``."""
    out = []
    for v in ordering:
        p, space = _higher_trace(a, ordering, v)
        _, inc = submodule_from_space(p, space, f"U{a.vertex_labels[v]}")
        _, proj = quotient_module(p, space, f"Δ{a.vertex_labels[v]}")
        out.append((inc, proj))
    return out


def division_verdict(m: Module) -> Verdict:
    """End(M) is a division ring; the split case is dim End(M) = 1."""
    if m.dim == 0:
        return Verdict.false(f"{m.name} is zero")
    dim_end = hom_dimension(m, m)
    if dim_end == 1:
        return Verdict.true("End is the ground field", {"end_dim": 1})
    try:
        gamma = endomorphism_algebra(m).algebra
    except UndecidedError as e:
        return Verdict.undetermined(e.reason, {"end_dim": dim_end})
    return is_division_ring(gamma).with_witness(end_dim=dim_end)


def filt_check(x: Module, deltas: Sequence[Module]) -> Tuple[Verdict, Optional[List[int]]]:
    """
    Decide X ∈ Filt(deltas) by peeling the largest Δ: the evaluation
    Δ^r -> X (r = dim Hom(Δ, X)) must be injective, and its cokernel must lie
    in Filt of the remaining Δs.

    Returns:
        (verdict, multiplicities) with multiplicities in the order of
        ``deltas`` on success
    """
    for d in deltas:
        if hom_dimension(d, d) != 1:
            return Verdict.undetermined(f"End({d.name}) is not the ground field"), None
    mult = [0] * len(deltas)
    current = x
    for idx in reversed(range(len(deltas))):
        if current.dim == 0:
            break
        d = deltas[idx]
        summand, ev = evaluation_map(d, current)
        if ev is None:
            continue
        r = len(summand.inclusions)
        if not ev.is_injective():
            witness = {"delta": d.name, "hom_dim": r, "kernel_dim": ev.source.dim - ev.rank(),
                       "remainder_dims": list(current.dims)}
            return Verdict.false(f"evaluation {d.name}^{r} -> {current.name} is not injective", witness), None
        mult[idx] = r
        current, _ = cokernel(ev, f"{x.name}/{d.name}^{r}")
    if current.dim:
        return Verdict.false("a remainder is left after peeling every Δ",
                             {"remainder_dims": list(current.dims)}), None
    return Verdict.true("filtered", {"multiplicities": mult}), mult
