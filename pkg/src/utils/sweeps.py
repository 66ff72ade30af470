"""
Sweeps over the random pool: agreement of the three highest weight
checkers and the properties every verified structure must have, plus the
oracle comparisons. Each sweep returns a JSON-ready summary with the seeds
of every disagreement.

Not re-exported from ``src.utils``.
"""

import itertools
import logging
from typing import Any, Dict, List, Optional

from src.algebra import Algebra
from src.exceptional import exceptional_check, standardise, strictly_full_check
from src.homalg import ext_dim
from src.hwc import (
    Ordering,
    ext_bound_check,
    filt_check,
    heredity_chain,
    hwc_check,
    iyama,
    stage_algebra,
    standard_defn_check,
    standard_modules,
)
from src.modcat import (
    hom_dimension,
    projective_module,
    projective_modules,
    rad,
    regular_module,
    simple_modules,
)
from src.recoll import colocalisation_criterion, heredity_test, homological_test
from .oracles import derivation_ext1_dim, filtration_search
from .random_pool import random_pool

logger = logging.getLogger(__name__)

TOR_DEGREES = 6
IYAMA_MAX_SIMPLES = 10


def _orderings(a: Algebra) -> List[Ordering]:
    return [Ordering(w) for w in itertools.permutations(range(a.n_vertices))]


def _property_failures(a: Algebra, ordering: Ordering, resolution_cap: int) -> List[str]:
    """Properties of a verified highest weight ordering that fail."""
    failures = []
    removed: List[int] = []
    for v in reversed(ordering.weights):
        stage, qmap = stage_algebra(a, removed)
        idx = v if qmap is None else qmap.vertex_map[v]
        if not homological_test(stage, [idx], TOR_DEGREES, resolution_cap).is_true:
            failures.append("homological")
        if heredity_test(stage, [idx]).is_true and not colocalisation_criterion(stage, [idx]).is_true:
            failures.append("colocalisation")
        removed.append(v)

    if not ext_bound_check(a, resolution_cap).is_true:
        failures.append("ext_bound")

    deltas = standard_modules(a, ordering)
    if not exceptional_check(deltas, None, resolution_cap).exceptional.is_true:
        failures.append("exceptional")
    if not strictly_full_check(deltas, None, resolution_cap).is_true:
        failures.append("strictly_full")
    std = standardise(deltas, resolution_cap)
    if not std.verdict.is_true or std.algebra is None:
        failures.append("standardise")
    else:
        projectives = [projective_module(a, v) for v in ordering]
        cartan = [[hom_dimension(p, q) for q in projectives] for p in projectives]
        if std.algebra.dim != a.dim or std.algebra.n_vertices != a.n_vertices or std.cartan() != cartan:
            failures.append("round_trip")
    return failures


def equivalence_sweep(count: int, start: int = 0, resolution_cap: int = 32,
                      iyama_count: Optional[int] = 50) -> Dict[str, Any]:
    """
    For every pool algebra and ordering: hwc_check, heredity_chain and
    standard_defn_check agree; verified orderings satisfy the recollement,
    Ext bound, exceptional and standardisation properties; the radical
    chain of the regular module gives a quasi-hereditary algebra.
    """
    summary: Dict[str, Any] = {"algebras": 0, "orderings": 0, "verified": 0, "disagreements": [],
                               "property_failures": [], "iyama_failures": [], "iyama_skipped": []}
    for seed, a in random_pool(count, start):
        summary["algebras"] += 1
        for ordering in _orderings(a):
            summary["orderings"] += 1
            v1, _ = hwc_check(a, ordering)
            v2, _ = heredity_chain(a, ordering)
            v3 = standard_defn_check(a, standard_modules(a, ordering), resolution_cap)
            truths = [v1.truth.value, v2.truth.value, v3.truth.value]
            if len(set(truths)) > 1:
                logger.warning(f"Seed {seed} {ordering.format(a)}: checkers disagree {truths}")
                summary["disagreements"].append({"seed": seed, "ordering": ordering.labels(a), "verdicts": truths})
                continue
            if v1.is_true:
                summary["verified"] += 1
                failed = _property_failures(a, ordering, resolution_cap)
                if failed:
                    summary["property_failures"].append({"seed": seed, "ordering": ordering.labels(a),
                                                         "failed": failed})
        if iyama_count is None or seed - start < iyama_count:
            try:
                if not iyama(a, regular_module(a), max_simples=IYAMA_MAX_SIMPLES).verdict.is_true:
                    summary["iyama_failures"].append(seed)
            except ValueError:
                summary["iyama_skipped"].append(seed)
    logger.info(f"Equivalence sweep: {summary['algebras']} algebras, {summary['orderings']} orderings, "
                f"{summary['verified']} verified, {len(summary['disagreements'])} disagreements")
    return summary


def oracle_sweep(count: int, start: int = 0, max_module_dim: int = 6, resolution_cap: int = 32) -> Dict[str, Any]:
    """
    Over F_2: Ext^1 against the derivation oracle on simples, projectives and
    their radicals; filt_check against exhaustive filtration search for the
    projectives, radicals and simples of every highest weight ordering.
    """
    summary: Dict[str, Any] = {"algebras": 0, "ext_pairs": 0, "filt_cases": 0,
                               "ext_mismatches": [], "filt_mismatches": []}
    for seed, a in random_pool(count, start, fields=("2",)):
        summary["algebras"] += 1
        sample = list(simple_modules(a)) + list(projective_modules(a))
        sample += [rad(p)[0] for p in projective_modules(a)]
        sample = [m for m in sample if 0 < m.dim <= max_module_dim]
        for x in sample:
            for y in sample:
                summary["ext_pairs"] += 1
                computed = ext_dim(x, y, 1, resolution_cap)
                expected = derivation_ext1_dim(x, y)
                if computed != expected:
                    summary["ext_mismatches"].append({"seed": seed, "source": list(x.dims),
                                                      "target": list(y.dims), "resolution": computed,
                                                      "oracle": expected})
        for ordering in _orderings(a):
            # peeling from the top is only complete for highest weight orderings
            if not hwc_check(a, ordering)[0].is_true:
                continue
            deltas = standard_modules(a, ordering)
            for x in sample:
                summary["filt_cases"] += 1
                verdict, _ = filt_check(x, deltas)
                if verdict.is_true != filtration_search(x, deltas):
                    summary["filt_mismatches"].append({"seed": seed, "ordering": ordering.labels(a),
                                                       "module": list(x.dims), "filt_check": verdict.truth.value})
    logger.info(f"Oracle sweep: {summary['ext_pairs']} Ext pairs, {summary['filt_cases']} Filt cases, "
                f"{len(summary['ext_mismatches'])} + {len(summary['filt_mismatches'])} mismatches")
    return summary
