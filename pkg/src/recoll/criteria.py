"""
Heredity, homological-embedding and colocalisation tests for ΛeΛ.
"""

import logging
from typing import Any, Dict, List, Optional, Sequence

from src.algebra import Algebra, ideal_product, radical
from src.homalg import default_degree_cap, ext_dim, min_resolution, tor
from src.modcat import (
    Module,
    cover_multiplicities,
    decompose,
    ideal_module,
    is_projective,
    projective_modules,
    regular_module,
    simple_modules,
    tensor_over,
)
from src.utils.exceptions import UndecidedError
from src.utils.verdict import Verdict
from .recollement import RecollementData, counit_sequence, i_lower_star, j_upper_shriek, recollement

logger = logging.getLogger(__name__)


def describe_summand(m: Module) -> str:
    """P<v> for an indecomposable projective, S<v> for a simple, else the dimension vector."""
    a = m.algebra
    if is_projective(m):
        mult = cover_multiplicities(m)
        if sum(mult) == 1:
            return f"P{a.vertex_labels[mult.index(1)]}"
    if m.dim == 1:
        return f"S{a.vertex_labels[m.dims.index(1)]}"
    return str(list(m.dims))


def _summands(m: Module) -> List[str]:
    try:
        return [describe_summand(p.module) for p in decompose(m).pieces]
    except UndecidedError:
        return [str(list(m.dims))]


def heredity_test(a: Algebra, vertices: Sequence[int]) -> Verdict:
    """
    ΛeΛ is a heredity ideal: projective as a right module and 𝔞·J·𝔞 = 0
    (the latter says eΛe is semisimple).
    """
    rd = recollement(a, vertices)
    ideal = rd.ideal
    try:
        j = radical(a)
    except UndecidedError as e:
        return Verdict.undetermined(e.reason)
    if ideal.dim == 0:
        return Verdict.true("zero ideal", {"ideal_dim": 0, "summands": []})
    sandwich = ideal_product(ideal_product(ideal, j), ideal).dim
    module, _ = ideal_module(ideal, rd.label)
    projective = is_projective(module)
    summands = _summands(module)
    witness: Dict[str, Any] = {"ideal_dim": ideal.dim, "summands": summands, "projective": projective,
                               "sandwich_dim": sandwich}
    if not projective:
        return Verdict.false(f"Λ{rd.label}Λ is not projective: {' + '.join(summands)}", witness)
    if sandwich:
        return Verdict.false(f"𝔞J𝔞 has dimension {sandwich}", witness)
    return Verdict.true(f"heredity ideal Λ{rd.label}Λ ≅ {' + '.join(summands)}", witness)


def homological_test(a: Algebra, vertices: Sequence[int], cap: Optional[int] = None,
                     resolution_cap: int = 32) -> Verdict:
    """
    Λ -> Λ/𝔞 is a homological epimorphism: Λ/𝔞 ⊗ Λ/𝔞 ≅ Λ/𝔞, Tor_p(Λ/𝔞, Λ/𝔞) = 0
    for 1 <= p <= cap, and Ext over Λ/𝔞 agrees with Ext over Λ on the simples
    and the regular module of the quotient.

    The verdict is conditional on the cap unless every resolution involved
    terminates within it.
    """
    rd = recollement(a, vertices)
    cap = default_degree_cap(a) if cap is None else cap
    bim = rd.quotient_bimodule
    quot = bim.module
    witness: Dict[str, Any] = {"cap": cap}
    reasons = []
    bounded = True

    tensor_dim = tensor_over(quot, bim).dim
    if tensor_dim != quot.dim:
        reasons.append(f"Λ/𝔞 ⊗ Λ/𝔞 has dimension {tensor_dim} ≠ {quot.dim}")
        witness["tensor_dim"] = tensor_dim

    try:
        res = min_resolution(quot, resolution_cap)
        if res.length is None or res.length > cap:
            bounded = False
        nonzero_tor = {}
        for p in range(1, cap + 1):
            value = tor(quot, bim, p, resolution_cap)
            if value:
                nonzero_tor[p] = value
        if nonzero_tor:
            witness["tor"] = nonzero_tor
            reasons.append(", ".join(f"Tor_{p} = {v}" for p, v in nonzero_tor.items()))

        samples = list(simple_modules(rd.quotient))
        if rd.quotient.dim:
            samples.append(regular_module(rd.quotient))
        lifted = [i_lower_star(rd, s) for s in samples]
        for x, xl in zip(samples, lifted):
            for side in (x, xl):
                length = min_resolution(side, resolution_cap).length
                if length is None or length > cap:
                    bounded = False
        mismatches = ext_mismatches(samples, lifted, cap, resolution_cap)
    except UndecidedError as e:
        return Verdict.undetermined(e.reason, witness)

    if mismatches:
        witness["ext_mismatches"] = mismatches
        mismatch = mismatches[0]
        reasons.append(f"Ext^{mismatch['degree']}({mismatch['source']}, {mismatch['target']}): "
                       f"{mismatch['over_algebra']} over Λ vs {mismatch['over_quotient']} over Λ/𝔞")
    if reasons:
        logger.info(f"Homological test at {rd.label} fails: {'; '.join(reasons)}")
        return Verdict.false("; ".join(reasons), witness)
    verdict = Verdict.true(f"Λ -> Λ/Λ{rd.label}Λ is a homological epimorphism", witness)
    return verdict if bounded else verdict.with_cap(cap)


def ext_mismatches(samples: List[Module], lifted: List[Module], cap: int,
                    resolution_cap: int) -> List[Dict[str, Any]]:
    out = []
    for p in range(1, cap + 1):
        for x, xl in zip(samples, lifted):
            for y, yl in zip(samples, lifted):
                over_quotient = ext_dim(x, y, p, resolution_cap)
                over_algebra = ext_dim(xl, yl, p, resolution_cap)
                if over_quotient != over_algebra:
                    out.append({"degree": p, "source": x.name, "target": y.name,
                                "over_algebra": over_algebra, "over_quotient": over_quotient})
    return out


def corner_projectivity(rd: RecollementData) -> bool:
    """j^! sends every indecomposable projective to a projective eΛe-module."""
    return all(is_projective(j_upper_shriek(rd, p)) for p in projective_modules(rd.algebra))


def colocalisation_criterion(a: Algebra, vertices: Sequence[int]) -> Verdict:
    """ε_P is a monomorphism for every indecomposable projective P."""
    rd = recollement(a, vertices)
    failures = []
    kernels = {}
    for p in projective_modules(a):
        seq = counit_sequence(rd, p)
        kernels[p.name] = seq.kernel_dim
        if not seq.mono:
            failures.append(p.name)
    witness: Dict[str, Any] = {"kernel_dims": kernels, "corner_projective": corner_projectivity(rd)}
    if not witness["corner_projective"]:
        logger.warning(f"j^! does not preserve projectives at {rd.label}")
    if failures:
        witness["failures"] = failures
        return Verdict.false(f"counit not mono at {', '.join(failures)}", witness)
    return Verdict.true("counit mono on every projective", witness)
