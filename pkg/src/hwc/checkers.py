"""
Highest weight structure, decided from the standard objects of an ordering
or from a candidate list of standard objects.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.algebra import Algebra
from src.homalg import ext_dim
from src.modcat import (
    Module,
    ModuleMap,
    cover_multiplicities,
    hom_dimension,
    is_projective,
    loewy_series,
    projective_modules,
)
from src.utils.exceptions import InvalidOrderingError, UndecidedError
from src.utils.verdict import Verdict
from .ordering import Ordering
from .standard import division_verdict, filt_check, standard_modules, standard_sequences

logger = logging.getLogger(__name__)

PROJECTIVE_GENERATOR = "by construction: the P_i are the indecomposable summands of Λ"


@dataclass
class HwCertificate:
    """
    Evidence for (or against) a highest weight structure.

    Attributes:
        ordering: the weights, smallest first
        deltas: Δ in the order of ``ordering``
        sequences: (U -> P, P -> Δ) for each weight
        u_multiplicities: Filt multiplicities of each U over the Δs (None
            where the check failed or was not reached)
        end_verdicts: End(Δ) is a division ring
    """
    algebra: Algebra
    ordering: Ordering
    deltas: List[Module]
    sequences: List[Tuple[ModuleMap, ModuleMap]]
    u_multiplicities: List[Optional[List[int]]] = field(default_factory=list)
    end_verdicts: List[Verdict] = field(default_factory=list)

    @property
    def u_modules(self) -> List[Module]:
        return [inc.source for inc, _ in self.sequences]

    def projective_multiplicities(self) -> List[Optional[List[int]]]:
        """(P : Δ_j) for each P in the order of the weights: Δ itself once plus the U-filtration."""
        table = []
        for i, mult in enumerate(self.u_multiplicities):
            if mult is None:
                table.append(None)
                continue
            row = list(mult)
            row[i] += 1
            table.append(row)
        return table

    def to_dict(self) -> Dict[str, Any]:
        a = self.algebra
        return {
            "ordering": self.ordering.labels(a),
            "delta_dims": [d.dim for d in self.deltas],
            "delta_dimension_vectors": [list(d.dims) for d in self.deltas],
            "delta_loewy": [loewy_series(d) for d in self.deltas],
            "u_dims": [u.dim for u in self.u_modules],
            "u_multiplicities": self.u_multiplicities,
            "projective_multiplicities": self.projective_multiplicities(),
            "end_verdicts": [v.truth.value for v in self.end_verdicts],
        }


def _hom_vanishing(deltas: Sequence[Module]) -> Optional[Dict[str, Any]]:
    """First pair i > j with Hom(Δ_i, Δ_j) ≠ 0."""
    for i in range(len(deltas)):
        for j in range(i):
            h = hom_dimension(deltas[i], deltas[j])
            if h:
                return {"source": deltas[i].name, "target": deltas[j].name, "hom_dim": h}
    return None


def hwc_check(a: Algebra, ordering: Ordering) -> Tuple[Verdict, HwCertificate]:
    """
    Check the highest weight axioms for ``ordering``: End(Δ) division,
    Hom(Δ_i, Δ_j) = 0 for i > j, U_i ∈ Filt(Δ_{i+1}, ..., Δ_n), and the P_i
    form a projective generator. The last axiom holds for every algebra,
    the P_i being the summands of Λ, and is recorded rather than tested.
    """
    if len(ordering) != a.n_vertices:
        raise InvalidOrderingError([w + 1 for w in ordering], a.n_vertices)
    deltas = standard_modules(a, ordering)
    cert = HwCertificate(a, ordering, deltas, standard_sequences(a, ordering))
    label = ordering.format(a)

    cert.end_verdicts = [division_verdict(d) for d in deltas]
    for d, v in zip(deltas, cert.end_verdicts):
        if not v.is_true:
            logger.info(f"{a.name} {label}: End({d.name}) {v.truth.value}")
            return (Verdict.false if v.is_false else Verdict.undetermined)(
                f"End({d.name}) is not a division ring: {v.reason}", {"axiom": "division", "delta": d.name}), cert

    pair = _hom_vanishing(deltas)
    if pair is not None:
        return Verdict.false(f"Hom({pair['source']}, {pair['target']}) ≠ 0", dict(pair, axiom="hom_vanishing")), cert

    for i, (inc, _) in enumerate(cert.sequences):
        u = inc.source
        verdict, mult = filt_check(u, deltas[i + 1:])
        if not verdict.is_true:
            cert.u_multiplicities.append(None)
            witness = {"axiom": "filtration", "u": u.name, "u_dims": list(u.dims),
                       "higher": [d.name for d in deltas[i + 1:]], "peeling": verdict.witness}
            if verdict.is_undetermined:
                return Verdict.undetermined(verdict.reason, witness), cert
            logger.info(f"{a.name} {label}: {u.name} not in Filt of the higher standards")
            return Verdict.false(f"{u.name} ∉ Filt({', '.join(d.name for d in deltas[i + 1:])})", witness), cert
        cert.u_multiplicities.append([0] * (i + 1) + mult)

    logger.info(f"{a.name} {label}: highest weight category")
    witness = dict(cert.to_dict(), generator=PROJECTIVE_GENERATOR)
    return Verdict.true(f"highest weight for {label}", witness), cert


def standard_defn_check(a: Algebra, deltas: Sequence[Module], resolution_cap: int = 32) -> Verdict:
    """
    Candidate standard objects (smallest weight first) satisfy: End(Δ_i)
    division; Hom(Δ_i, Δ_j) = 0 for i > j; Ext^1(Δ_i, Δ_j) = 0 for i >= j;
    and the generator standardised from them is a projective generator.
    """
    for d in deltas:
        v = division_verdict(d)
        if not v.is_true:
            factory = Verdict.false if v.is_false else Verdict.undetermined
            return factory(f"End({d.name}) is not a division ring", {"condition": 1, "delta": d.name})
    pair = _hom_vanishing(deltas)
    if pair is not None:
        return Verdict.false(f"Hom({pair['source']}, {pair['target']}) ≠ 0", dict(pair, condition=2))
    try:
        for i in range(len(deltas)):
            for j in range(i + 1):
                value = ext_dim(deltas[i], deltas[j], 1, resolution_cap)
                if value:
                    return Verdict.false(f"Ext^1({deltas[i].name}, {deltas[j].name}) = {value}",
                                         {"condition": 3, "source": deltas[i].name,
                                          "target": deltas[j].name, "ext_dim": value})
    except UndecidedError as e:
        return Verdict.undetermined(e.reason, {"condition": 3})

    from src.exceptional import standardise
    try:
        std = standardise(deltas, resolution_cap)
    except UndecidedError as e:
        return Verdict.undetermined(e.reason, {"condition": 4})
    if std.generator is None:
        return std.verdict.with_witness(condition=4)
    generator = std.generator
    if not is_projective(generator):
        return Verdict.false("standardised generator is not projective",
                             {"condition": 4, "generator_dims": list(generator.dims)})
    mult = cover_multiplicities(generator)
    missing = [p.name for p, m in zip(projective_modules(a), mult) if not m]
    if missing:
        return Verdict.false(f"standardised generator misses {', '.join(missing)}",
                             {"condition": 4, "missing": missing})
    return Verdict.true("standard objects of a highest weight structure",
                        {"generator_multiplicities": mult})
