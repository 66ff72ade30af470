"""
Heredity chains, the search over orderings, and the stage-by-stage
recollement report of a highest weight category.

Stage algebras are Λ / Λ e_R Λ for the set R of weights already removed;
chains remove the largest remaining weight first.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from threading import Lock
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

from src.algebra import Algebra, QuotientMap
from src.homalg import default_degree_cap, ext_dim
from src.modcat import (
    Module,
    hom_dimension,
    projective_module,
    regular_module,
    restriction_of_scalars,
    simple_modules,
)
from src.recoll import (
    ext_mismatches,
    heredity_test,
    homological_test,
    i_lower_star,
    j_lower_shriek,
    recollement,
)
from src.utils.exceptions import UndecidedError
from src.utils.verdict import Verdict, all_of
from .checkers import hwc_check
from .ordering import Ordering

logger = logging.getLogger(__name__)


def stage_algebra(a: Algebra, removed: Sequence[int]) -> Tuple[Algebra, Optional[QuotientMap]]:
    """Λ / Λ e_R Λ with its projection; Λ itself when nothing is removed."""
    if not removed:
        return a, None
    rd = recollement(a, removed)
    return rd.quotient, rd.quotient_map


def _stage_vertex(qmap: Optional[QuotientMap], v: int) -> int:
    return v if qmap is None else qmap.vertex_map[v]


@dataclass
class ChainStage:
    weight: str
    algebra: Algebra
    verdict: Verdict

    def to_dict(self) -> Dict[str, Any]:
        data = {"weight": self.weight, "algebra_dim": self.algebra.dim, "verdict": self.verdict.truth.value}
        data.update({k: v for k, v in self.verdict.witness.items() if k in ("ideal_dim", "summands")})
        return data


@dataclass
class HeredityChain:
    """Λ = Λ_n -> ... -> Λ_0 = 0, one heredity ideal per step."""
    ordering: Ordering
    stages: List[ChainStage] = field(default_factory=list)

    @property
    def dims(self) -> List[int]:
        return [s.algebra.dim for s in self.stages]

    def to_dict(self) -> Dict[str, Any]:
        return {"stages": [s.to_dict() for s in self.stages], "stage_dims": self.dims}


def heredity_chain(a: Algebra, ordering: Ordering) -> Tuple[Verdict, HeredityChain]:
    chain = HeredityChain(ordering)
    removed: List[int] = []
    for v in reversed(ordering.weights):
        stage, qmap = stage_algebra(a, removed)
        verdict = heredity_test(stage, [_stage_vertex(qmap, v)])
        chain.stages.append(ChainStage(a.vertex_labels[v], stage, verdict))
        logger.debug(f"Chain {ordering.format(a)}: removing {a.vertex_labels[v]} from dim {stage.dim}: {verdict}")
        if not verdict.is_true:
            witness = {"weight": a.vertex_labels[v], "stage_dim": stage.dim, **verdict.witness, **chain.to_dict()}
            factory = Verdict.false if verdict.is_false else Verdict.undetermined
            return factory(f"step removing {a.vertex_labels[v]}: {verdict.reason}", witness), chain
        removed.append(v)
    return Verdict.true(f"heredity chain for {ordering.format(a)}", chain.to_dict()), chain


class _StepMemo:
    """Heredity of one removal step, keyed by (removed set, vertex); shared across workers."""

    def __init__(self, a: Algebra):
        self.algebra = a
        self.results: Dict[Tuple[FrozenSet[int], int], bool] = {}
        self.lock = Lock()

    def passes(self, removed: FrozenSet[int], v: int) -> bool:
        key = (removed, v)
        with self.lock:
            if key in self.results:
                return self.results[key]
        stage, qmap = stage_algebra(self.algebra, sorted(removed))
        ok = heredity_test(stage, [_stage_vertex(qmap, v)]).is_true
        with self.lock:
            self.results[key] = ok
        return ok


def _search_from(memo: _StepMemo, removal: List[int], n: int) -> List[Tuple[int, ...]]:
    if len(removal) == n:
        return [tuple(reversed(removal))]
    removed = frozenset(removal)
    found = []
    for v in range(n):
        if v not in removed and memo.passes(removed, v):
            found.extend(_search_from(memo, removal + [v], n))
    return found


def qh_search(a: Algebra, jobs: int = 1, max_simples: int = 8) -> List[Ordering]:
    """
    Every ordering whose heredity chain passes, in lexicographic order.

    Raises:
        ValueError: more simples than ``max_simples``
    """
    n = a.n_vertices
    if n > max_simples:
        logger.error(f"qh_search on {a.name}: {n} simples exceed the limit {max_simples}")
        raise ValueError(f"{n} simples exceed max_qh_simples = {max_simples}")
    memo = _StepMemo(a)
    if n == 0:
        return [Ordering(())]
    firsts = [v for v in range(n) if memo.passes(frozenset(), v)]
    if jobs > 1 and len(firsts) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            branches = list(pool.map(lambda v: _search_from(memo, [v], n), firsts))
    else:
        branches = [_search_from(memo, [v], n) for v in firsts]
    found = sorted(w for branch in branches for w in branch)
    logger.info(f"qh_search on {a.name}: {len(found)} admissible orderings")
    return [Ordering(w) for w in found]


@dataclass
class StageReport:
    """One step Λ_i -> Λ_{i-1} of the chain of recollements."""
    weight: str
    algebra_dim: int
    gamma_dim: int
    corner_dim: int
    quotient_dim: int
    heredity: Verdict
    homological: Verdict
    kernel_of_hom: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "weight": self.weight,
            "algebra_dim": self.algebra_dim,
            "gamma_dim": self.gamma_dim,
            "corner_dim": self.corner_dim,
            "quotient_dim": self.quotient_dim,
            "heredity": self.heredity.to_dict(),
            "homological": self.homological.to_dict(),
            "quotient_is_hom_kernel": self.kernel_of_hom,
        }


def hwt_chain_report(a: Algebra, ordering: Ordering, cap: Optional[int] = None,
                     resolution_cap: int = 32) -> Tuple[Verdict, List[StageReport]]:
    """
    For each weight from the largest down: the stage algebra, Γ = End(Δ),
    the recollement at that weight with its heredity and homological tests,
    and the check that the next stage is {X : Hom(Δ, X) = 0} on the stage
    simples.
    """
    verdict, cert = hwc_check(a, ordering)
    if not verdict.is_true:
        return verdict, []
    cap = default_degree_cap(a) if cap is None else cap
    reports = []
    for k in reversed(range(len(ordering))):
        v = ordering.weights[k]
        stage, qmap = stage_algebra(a, ordering.weights[k + 1:])
        idx = _stage_vertex(qmap, v)
        rd = recollement(stage, [idx])
        delta = projective_module(stage, idx)
        kernel_ok = all((hom_dimension(delta, s) == 0) == (w != idx)
                        for w, s in enumerate(simple_modules(stage)))
        reports.append(StageReport(
            a.vertex_labels[v], stage.dim, hom_dimension(cert.deltas[k], cert.deltas[k]),
            rd.corner.dim, rd.quotient.dim,
            heredity_test(stage, [idx]),
            homological_test(stage, [idx], cap, resolution_cap),
            kernel_ok,
        ))
    combined = all_of([r.heredity for r in reports] + [r.homological for r in reports],
                      "every stage is a homological recollement")
    if combined.is_true and not all(r.kernel_of_hom for r in reports):
        bad = [r.weight for r in reports if not r.kernel_of_hom]
        return Verdict.false(f"quotient is not the Hom-kernel at {', '.join(bad)}"), reports
    return combined.with_witness(stage_dims=[r.algebra_dim for r in reports]), reports


def delta_via_recollement(a: Algebra, ordering: Ordering, k: int) -> Module:
    """Δ at position k as j_!(Γ) for the recollement at that weight in its stage algebra, read over Λ."""
    v = ordering.weights[k]
    stage, qmap = stage_algebra(a, ordering.weights[k + 1:])
    rd = recollement(stage, [_stage_vertex(qmap, v)])
    z = j_lower_shriek(rd, regular_module(rd.corner))
    if qmap is None:
        return z.renamed(f"j!Γ{a.vertex_labels[v]}")
    return restriction_of_scalars(z, a, qmap.matrix, qmap.vertex_map, f"j!Γ{a.vertex_labels[v]}")


def stage_ext_comparison(a: Algebra, ordering: Ordering, cap: Optional[int] = None,
                         resolution_cap: int = 32) -> Verdict:
    """Ext between simples of Λ/Λe_nΛ agrees with Ext between them over Λ, e_n the largest weight."""
    cap = default_degree_cap(a) if cap is None else cap
    if not len(ordering):
        return Verdict.true("no simples")
    rd = recollement(a, [ordering.weights[-1]])
    samples = list(simple_modules(rd.quotient))
    try:
        mismatches = ext_mismatches(samples, [i_lower_star(rd, s) for s in samples], cap, resolution_cap)
    except UndecidedError as e:
        return Verdict.undetermined(e.reason)
    if mismatches:
        return Verdict.false("Ext differs between the stage and Λ", {"ext_mismatches": mismatches})
    return Verdict.true("Ext agrees on the stage simples", cap=cap)


def ext_bound_check(a: Algebra, resolution_cap: int = 32) -> Verdict:
    """Ext^{2n-1}(S_i, S_j) = 0 for all simples, n the number of simples."""
    degree = 2 * a.n_vertices - 1
    if degree < 1:
        return Verdict.true("no simples")
    simples = simple_modules(a)
    try:
        for x in simples:
            for y in simples:
                value = ext_dim(x, y, degree, resolution_cap)
                if value:
                    return Verdict.false(f"Ext^{degree}({x.name}, {y.name}) = {value}",
                                         {"degree": degree, "source": x.name, "target": y.name, "dim": value})
    except UndecidedError as e:
        return Verdict.undetermined(e.reason)
    return Verdict.true(f"Ext^{degree} vanishes between simples", {"degree": degree})
