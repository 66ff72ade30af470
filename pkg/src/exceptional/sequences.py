"""
Exceptional sequences and the extension closure of a sequence.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from src.homalg import default_degree_cap, ext_space, min_resolution, yoneda_extension
from src.hwc import division_verdict
from src.modcat import Module, decompose, iso_test, simple_modules
from src.utils.exceptions import IncompatibleAlgebraError, UndecidedError
from src.utils.verdict import Verdict

logger = logging.getLogger(__name__)


@dataclass
class ExceptionalReport:
    """
    Attributes:
        sequence: E_1, ..., E_n
        ext: ext[i][j] = [dim Ext^p(E_i, E_j) for p = 0..bound] for i > j
        end_verdicts: End(E_i) is a division ring
        exceptional: the combined verdict
        full: the sequence has as many objects as there are simples
        strictly_full: filled in by strictly_full_check
    """
    sequence: List[Module]
    ext: Dict[str, List[int]] = field(default_factory=dict)
    end_verdicts: List[Verdict] = field(default_factory=list)
    exceptional: Verdict = field(default_factory=lambda: Verdict.undetermined("not checked"))
    full: bool = False
    strictly_full: Optional[Verdict] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "sequence": [m.name for m in self.sequence],
            "dimension_vectors": [list(m.dims) for m in self.sequence],
            "ext": self.ext,
            "end_verdicts": [v.truth.value for v in self.end_verdicts],
            "exceptional": self.exceptional.to_dict(),
            "full": self.full,
        }
        if self.strictly_full is not None:
            data["strictly_full"] = self.strictly_full.to_dict()
        return data


def exceptional_check(seq: Sequence[Module], cap: Optional[int] = None,
                      resolution_cap: int = 32) -> ExceptionalReport:
    """
    End(E_i) division and Ext^p(E_i, E_j) = 0 for i > j and all p >= 0.

    Degrees run to pd(E_i) when its resolution terminates (unconditional),
    else to ``cap`` (conditional).
    """
    seq = list(seq)
    report = ExceptionalReport(seq)
    if seq and any(m.algebra is not seq[0].algebra for m in seq):
        raise IncompatibleAlgebraError("exceptional_check")
    if not seq:
        report.exceptional = Verdict.true("empty sequence")
        return report
    cap = default_degree_cap(seq[0].algebra) if cap is None else cap
    report.full = bool(seq) and len(seq) == len(simple_modules(seq[0].algebra))
    report.end_verdicts = [division_verdict(m) for m in seq]
    for m, v in zip(seq, report.end_verdicts):
        if not v.is_true:
            factory = Verdict.false if v.is_false else Verdict.undetermined
            report.exceptional = factory(f"End({m.name}) is not a division ring", {"object": m.name})
            return report

    conditional = False
    for i in range(len(seq)):
        res = min_resolution(seq[i], resolution_cap)
        if res.terminated and res.length <= cap:
            bound = res.length
        else:
            bound = cap
            conditional = True
        for j in range(i):
            values = []
            try:
                for p in range(bound + 1):
                    values.append(ext_space(seq[i], seq[j], p, resolution_cap).dim)
            except UndecidedError as e:
                report.exceptional = Verdict.undetermined(e.reason)
                return report
            report.ext[f"{seq[i].name},{seq[j].name}"] = values
            for p, value in enumerate(values):
                if value:
                    witness = {"source": seq[i].name, "target": seq[j].name, "degree": p, "dim": value}
                    report.exceptional = Verdict.false(
                        f"Ext^{p}({seq[i].name}, {seq[j].name}) = {value}", witness)
                    return report
    verdict = Verdict.true("exceptional sequence")
    report.exceptional = verdict.with_cap(cap) if conditional else verdict
    logger.debug(f"Exceptional check on {[m.name for m in seq]}: {report.exceptional}")
    return report


def filt_closure_check(seq: Sequence[Module], size_bound: int, resolution_cap: int = 32) -> Verdict:
    """
    Extensions between members of add(seq), built from the basis classes of
    Ext^1 and from their sum, stay in add(seq) up to ``size_bound``.
    """
    generators: List[Module] = []
    try:
        for m in seq:
            generators.extend(p.module for p in decompose(m).pieces)
    except UndecidedError as e:
        return Verdict.undetermined(e.reason)

    def in_add(piece: Module) -> bool:
        return any(iso_test(piece, g).is_true for g in generators)

    examined = 0
    for x in generators:
        for y in generators:
            try:
                space = ext_space(x, y, 1, resolution_cap)
            except UndecidedError as e:
                return Verdict.undetermined(e.reason)
            if not space.dim or x.dim + y.dim > size_bound:
                continue
            classes = space.classes()
            if len(classes) > 1:
                classes.append(space.element([x.field.one] * space.dim))
            for c in classes:
                examined += 1
                middle = yoneda_extension(c).middle
                try:
                    pieces = [p.module for p in decompose(middle).pieces]
                except UndecidedError as e:
                    return Verdict.undetermined(e.reason)
                for piece in pieces:
                    if not in_add(piece):
                        return Verdict.false(f"an extension of {x.name} by {y.name} leaves add",
                                             {"source": x.name, "target": y.name,
                                              "summand_dims": list(piece.dims)})
    return Verdict.true("Filt equals add", {"extensions_examined": examined, "size_bound": size_bound})
