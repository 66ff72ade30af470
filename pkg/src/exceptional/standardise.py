"""
Standardisation of an exceptional sequence E_1, ..., E_n.

Each E_i is extended universally by E_{i+1}, then E_{i+2}, ..., then E_n.
An extension by E_t keeps Ext^1(-, E_s) = 0 for s < t because
Ext^1(E_t, E_s) = 0, so P̃_i ends with Ext^1(P̃_i, E_j) = 0 for every j.
The endomorphism ring of ⊕ P̃_i is then quasi-hereditary with standard
modules Hom(⊕ P̃, E_i).
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from src.algebra import Algebra
from src.homalg import ext_dim, universal_extension
from src.hwc import Ordering, hwc_check, standard_modules
from src.modcat import (
    EndomorphismAlgebra,
    Module,
    decompose,
    direct_sum,
    endomorphism_algebra,
    hom_dimension,
    iso_test,
)
from src.utils.exceptions import UndecidedError
from src.utils.verdict import Verdict

logger = logging.getLogger(__name__)


@dataclass
class Standardisation:
    """
    Attributes:
        sequence: E_1, ..., E_n
        generators: P̃_1, ..., P̃_n
        generator: ⊕ P̃_i, or None when the construction stopped early
        endomorphism: End(⊕ P̃_i) with its idempotents
        ordering: vertex of P̃_i in the endomorphism algebra, for i = 1..n
        deltas: Hom(⊕ P̃, E_i) as modules over the endomorphism algebra
        hw_verdict: highest weight check of the endomorphism algebra
        verdict: the combined outcome
    """
    sequence: List[Module]
    generators: List[Module] = field(default_factory=list)
    generator: Optional[Module] = None
    endomorphism: Optional[EndomorphismAlgebra] = None
    ordering: Optional[Ordering] = None
    deltas: List[Module] = field(default_factory=list)
    hw_verdict: Optional[Verdict] = None
    verdict: Verdict = field(default_factory=lambda: Verdict.undetermined("not standardised"))

    @property
    def algebra(self) -> Optional[Algebra]:
        return self.endomorphism.algebra if self.endomorphism is not None else None

    def cartan(self) -> List[List[int]]:
        """dim Hom(P̃_i, P̃_j)."""
        return [[hom_dimension(p, q) for q in self.generators] for p in self.generators]

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "sequence": [m.name for m in self.sequence],
            "generator_dims": [p.dim for p in self.generators],
            "generator_dimension_vectors": [list(p.dims) for p in self.generators],
            **self.verdict.to_dict(),
        }
        if self.endomorphism is not None:
            data["algebra_dim"] = self.endomorphism.algebra.dim
            data["cartan"] = self.cartan()
            data["delta_dims"] = [d.dim for d in self.deltas]
            data["delta_dimension_vectors"] = [list(d.dims) for d in self.deltas]
        if self.ordering is not None and self.endomorphism is not None:
            data["ordering"] = self.ordering.labels(self.endomorphism.algebra)
        if self.hw_verdict is not None:
            data["highest_weight"] = self.hw_verdict.to_dict()
        return data


def _precondition(seq: Sequence[Module], resolution_cap: int) -> Optional[Verdict]:
    """Ext^1(E_i, E_j) = 0 for i >= j."""
    for i in range(len(seq)):
        for j in range(i + 1):
            value = ext_dim(seq[i], seq[j], 1, resolution_cap)
            if value:
                return Verdict.false(f"Ext^1({seq[i].name}, {seq[j].name}) = {value}",
                                     {"source": seq[i].name, "target": seq[j].name, "ext_dim": value})
    return None


def _extend(e: Module, later: Sequence[Module], resolution_cap: int, name: str) -> Module:
    x = e
    for y in later:
        x, _, r = universal_extension(x, y, resolution_cap)
        if r:
            logger.debug(f"{name}: extended by {y.name}^{r}, dim {x.dim}")
    return x.renamed(name)


def standardise(seq: Sequence[Module], resolution_cap: int = 32) -> Standardisation:
    """
    Build P̃_1, ..., P̃_n and the highest weight structure on End(⊕ P̃_i).

    Raises:
        UndecidedError: an Ext space or a decomposition is out of reach
    """
    seq = list(seq)
    std = Standardisation(seq)
    if not seq:
        std.verdict = Verdict.false("empty sequence")
        return std

    failure = _precondition(seq, resolution_cap)
    if failure is not None:
        std.verdict = failure
        return std

    std.generators = [_extend(e, seq[i + 1:], resolution_cap, f"P~{i + 1}") for i, e in enumerate(seq)]
    for p in std.generators:
        for e in seq:
            value = ext_dim(p, e, 1, resolution_cap)
            if value:
                std.verdict = Verdict.false(f"Ext^1({p.name}, {e.name}) = {value} after standardisation",
                                            {"generator": p.name, "target": e.name, "ext_dim": value})
                return std

    for p in std.generators:
        if decompose(p).count != 1:
            std.verdict = Verdict.false(f"{p.name} is decomposable", {"generator": p.name, "dims": list(p.dims)})
            return std
    for i in range(len(std.generators)):
        for j in range(i):
            if iso_test(std.generators[i], std.generators[j]).is_true:
                std.verdict = Verdict.false(f"{std.generators[i].name} ≅ {std.generators[j].name}")
                return std

    std.generator = direct_sum(std.generators, "P~").module
    std.endomorphism = endomorphism_algebra(std.generator, basic=True)
    pieces = [piece.module for piece in std.endomorphism.decomposition.pieces]
    weights = []
    for p in std.generators:
        match = next((v for v, q in enumerate(pieces) if iso_test(p, q).is_true), None)
        if match is None:
            raise UndecidedError(f"{p.name} not found among the pieces of the generator")
        weights.append(match)
    std.ordering = Ordering(tuple(weights))
    std.deltas = [std.endomorphism.hom_module(e, f"Δ'{i + 1}") for i, e in enumerate(seq)]

    gamma = std.endomorphism.algebra
    std.hw_verdict, _ = hwc_check(gamma, std.ordering)
    if not std.hw_verdict.is_true:
        std.verdict = std.hw_verdict
        return std
    for i, (computed, built) in enumerate(zip(standard_modules(gamma, std.ordering), std.deltas)):
        if not iso_test(computed, built).is_true:
            std.verdict = Verdict.false(f"standard module at {i + 1} differs from Hom(P~, {seq[i].name})",
                                        {"position": i + 1, "computed": list(computed.dims),
                                         "hom_module": list(built.dims)})
            return std
    std.verdict = Verdict.true("standardised to a highest weight algebra",
                               {"algebra_dim": gamma.dim, "delta_dims": [d.dim for d in std.deltas]})
    logger.info(f"Standardised {[m.name for m in seq]}: End of dim {gamma.dim}")
    return std
