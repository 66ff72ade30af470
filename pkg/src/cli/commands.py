"""
Subcommands. Each takes the parsed arguments and a Context and returns a
Report; the runner renders it and maps its verdict to the exit code.
"""

import logging
from argparse import Namespace
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional

from src.algebra import Algebra, cartan_matrix, radical
from src.exceptional import exceptional_check, filt_closure_check, standardise, strictly_full_check, tilting_check
from src.homalg import default_degree_cap, ext_dim, ext_table, global_dimension, min_resolution, projective_dimension, tor
from src.hwc import (
    Ordering,
    delta_via_recollement,
    division_verdict,
    ext_bound_check,
    filt_check,
    heredity_chain,
    hwc_check,
    hwt_chain_report,
    iyama,
    parse_ordering,
    qh_search,
    stage_ext_comparison,
    standard_defn_check,
    standard_modules,
)
from src.modcat import Module, iso_test, loewy_series, projective_modules, regular_bimodule, resolve_module, resolve_modules
from src.recoll import (
    colocalisation_criterion,
    counit_sequence,
    heredity_test,
    homological_test,
    parse_idempotent,
    recollement,
    recollement_functors,
    serre_idempotent,
)
from src.report import Report
from src.utils.exceptions import UndecidedError
from src.utils.verdict import Verdict, all_of

logger = logging.getLogger(__name__)


@dataclass
class Context:
    """The loaded algebra and the effective caps of one invocation."""
    algebra: Algebra
    source: str
    cap: Optional[int]
    resolution_cap: int
    jobs: int
    max_qh_simples: int

    @property
    def degree_cap(self) -> int:
        return default_degree_cap(self.algebra) if self.cap is None else self.cap

    @property
    def base_dir(self) -> str:
        return str(Path(self.source).parent)

    def module(self, text: str) -> Module:
        return resolve_module(self.algebra, text, self.base_dir)

    def modules(self, text: str) -> List[Module]:
        return resolve_modules(self.algebra, text, self.base_dir)

    def ordering(self, text: Optional[str]) -> Ordering:
        if not text:
            return Ordering.identity(self.algebra.n_vertices)
        return parse_ordering(self.algebra, text)


def _module_summary(m: Module) -> Dict[str, Any]:
    return {"name": m.name, "dim": m.dim, "dimension_vector": list(m.dims), "loewy": loewy_series(m)}


def info(args: Namespace, ctx: Context) -> Report:
    a = ctx.algebra
    report = Report("info", {"algebra": ctx.source})
    report.add("algebra", {"name": a.name, "field": str(a.field), "dim": a.dim, "simples": a.n_vertices,
                           "vertex_labels": list(a.vertex_labels)})
    report.add("cartan", cartan_matrix(a))
    report.add("projectives", [_module_summary(p) for p in projective_modules(a)])
    try:
        report.add("radical_dim", radical(a).dim)
    except UndecidedError as e:
        logger.warning(f"Radical of {a.name} not computed: {e.reason}")
        report.add("radical_dim", None)
    report.add("global_dimension", global_dimension(a, ctx.resolution_cap).to_dict())
    return report


def ext_command(args: Namespace, ctx: Context) -> Report:
    x, y = ctx.module(args.source), ctx.module(args.target)
    report = Report("ext", {"source": x.name, "target": y.name, "degree": args.degree})
    try:
        if args.degree is not None:
            report.add("dim", ext_dim(x, y, args.degree, ctx.resolution_cap))
        else:
            table = ext_table([x], [y], ctx.degree_cap, ctx.resolution_cap)
            report.add("dims", [row[0][0] for row in table.values])
            report.add("certified", table.certified)
    except UndecidedError as e:
        report.set_verdict(Verdict.undetermined(e.reason))
    return report


def tor_command(args: Namespace, ctx: Context) -> Report:
    a = ctx.algebra
    x = ctx.module(args.module)
    vertices = parse_idempotent(a, args.idempotent)
    if vertices:
        bim = recollement(a, vertices).quotient_bimodule
    else:
        bim = regular_bimodule(a)
    degrees = [args.degree] if args.degree is not None else list(range(1, ctx.degree_cap + 1))
    report = Report("tor", {"module": x.name, "bimodule": bim.name, "degrees": degrees})
    values: Dict[str, Optional[int]] = {}
    for p in degrees:
        try:
            values[str(p)] = tor(x, bim, p, ctx.resolution_cap)
        except UndecidedError as e:
            values[str(p)] = None
            report.set_verdict(Verdict.undetermined(e.reason))
    report.add("tor", values)
    return report


def resolve(args: Namespace, ctx: Context) -> Report:
    x = ctx.module(args.module)
    res = min_resolution(x, ctx.resolution_cap)
    report = Report("resolve", {"module": x.name, "resolution_cap": ctx.resolution_cap})
    report.add("terms", [{"degree": k, "dim": p.dim, "projectives": res.multiplicities(k)}
                         for k, p in enumerate(res.projectives)])
    report.add("syzygy_dims", [omega.dim for omega, _ in res.syzygies])
    report.add("terminated", res.terminated)
    report.add("projective_dimension", projective_dimension(x, ctx.resolution_cap).to_dict())
    if not res.terminated:
        report.set_verdict(Verdict.undetermined(f"resolution cap {ctx.resolution_cap} reached"))
    return report


def qh_check(args: Namespace, ctx: Context) -> Report:
    a = ctx.algebra
    ordering = ctx.ordering(args.ordering)
    report = Report("qh-check", {"ordering": ordering.labels(a), "method": args.method})
    verdicts: Dict[str, Verdict] = {}
    if args.method in ("hwc", "all"):
        verdicts["hwc"], cert = hwc_check(a, ordering)
        report.add("certificate", cert.to_dict())
    if args.method in ("chain", "all"):
        verdicts["chain"], chain = heredity_chain(a, ordering)
        report.add("chain", chain.to_dict())
    if args.method in ("standard", "all"):
        verdicts["standard"] = standard_defn_check(a, standard_modules(a, ordering), ctx.resolution_cap)
    if len(verdicts) > 1:
        report.add("verdicts", {k: v.to_dict() for k, v in verdicts.items()})
        truths = {v.truth for v in verdicts.values()}
        report.add("agree", len(truths) == 1)
        if len(truths) > 1:
            logging.getLogger("qh-check").error(f"Checkers disagree on {ordering.format(a)}")
    report.set_verdict(next(iter(verdicts.values())))
    return report


def qh_search_command(args: Namespace, ctx: Context) -> Report:
    a = ctx.algebra
    report = Report("qh-search", {"jobs": ctx.jobs})
    orderings = qh_search(a, ctx.jobs, ctx.max_qh_simples)
    report.add("orderings", [o.labels(a) for o in orderings])
    report.set_verdict(Verdict.of(bool(orderings), f"{len(orderings)} admissible orderings"))
    return report


def standard(args: Namespace, ctx: Context) -> Report:
    a = ctx.algebra
    if args.modules:
        deltas = ctx.modules(args.modules)
        report = Report("standard", {"modules": [d.name for d in deltas]})
        report.add("candidates", [_module_summary(d) for d in deltas])
        report.set_verdict(standard_defn_check(a, deltas, ctx.resolution_cap))
        return report
    ordering = ctx.ordering(args.ordering)
    report = Report("standard", {"ordering": ordering.labels(a)})
    deltas = standard_modules(a, ordering)
    summaries = []
    for d in deltas:
        entry = _module_summary(d)
        entry["end_division"] = division_verdict(d).truth.value
        summaries.append(entry)
    report.add("standard_modules", summaries)
    return report


def filt(args: Namespace, ctx: Context) -> Report:
    a = ctx.algebra
    x = ctx.module(args.module)
    if args.modules:
        deltas = ctx.modules(args.modules)
    else:
        deltas = standard_modules(a, ctx.ordering(args.ordering))
    report = Report("filt", {"module": x.name, "deltas": [d.name for d in deltas]})
    verdict, mult = filt_check(x, deltas)
    if mult is not None:
        report.add("multiplicities", mult)
    report.set_verdict(verdict)
    return report


def heredity(args: Namespace, ctx: Context) -> Report:
    a = ctx.algebra
    vertices = parse_idempotent(a, args.idempotent)
    report = Report("heredity", {"idempotent": recollement(a, vertices).label, "homological": args.homological})
    verdict = heredity_test(a, vertices)
    report.add("heredity", verdict.to_dict())
    if args.homological:
        hom = homological_test(a, vertices, ctx.cap, ctx.resolution_cap)
        report.add("homological", hom.to_dict())
        verdict = all_of([verdict, hom], "heredity ideal with a homological epimorphism")
    report.set_verdict(verdict)
    return report


def recollement_command(args: Namespace, ctx: Context) -> Report:
    a = ctx.algebra
    vertices = parse_idempotent(a, args.idempotent)
    rd = recollement(a, vertices)
    report = Report("recollement", {"idempotent": rd.label, "module": args.module})
    report.add("dims", {"algebra": a.dim, "corner": rd.corner.dim, "ideal": rd.ideal.dim,
                        "quotient": rd.quotient.dim})
    outside = [v for v in range(a.n_vertices) if v not in vertices]
    _, serre = serre_idempotent(a, outside)
    report.add("serre", serre.to_dict())
    verdicts = [serre]
    if args.module:
        x = ctx.module(args.module)
        images = recollement_functors(rd, x)
        report.add("functors", images.to_dict())
        seq = counit_sequence(rd, x)
        report.add("counit", seq.to_dict())
        verdicts.append(Verdict.of(seq.exact, "counit sequence exact" if seq.exact else "counit sequence not exact"))
        verdicts.append(Verdict.of(images.adjunction_ok, "adjunction dimensions agree" if images.adjunction_ok else "adjunction dimensions disagree"))
    report.set_verdict(all_of(verdicts, f"recollement at {rd.label}"))
    return report


def coloc(args: Namespace, ctx: Context) -> Report:
    a = ctx.algebra
    vertices = parse_idempotent(a, args.idempotent)
    report = Report("coloc", {"idempotent": recollement(a, vertices).label})
    report.set_verdict(colocalisation_criterion(a, vertices))
    return report


def exceptional(args: Namespace, ctx: Context) -> Report:
    seq = ctx.modules(args.modules)
    report = Report("exceptional", {"modules": [m.name for m in seq], "strict": args.strict,
                                     "closure": args.closure})
    result = exceptional_check(seq, ctx.cap, ctx.resolution_cap)
    verdicts = [result.exceptional]
    if args.strict and result.exceptional.is_true:
        result.strictly_full = strictly_full_check(seq, ctx.cap, ctx.resolution_cap)
        verdicts.append(result.strictly_full)
    report.add("sequence", result.to_dict())
    if args.closure is not None:
        closure = filt_closure_check(seq, args.closure, ctx.resolution_cap)
        report.add("filt_closure", closure.to_dict())
        verdicts.append(closure)
    report.set_verdict(all_of(verdicts, "exceptional sequence"))
    return report


def standardise_command(args: Namespace, ctx: Context) -> Report:
    seq = ctx.modules(args.modules)
    report = Report("standardise", {"modules": [m.name for m in seq]})
    try:
        std = standardise(seq, ctx.resolution_cap)
    except UndecidedError as e:
        report.set_verdict(Verdict.undetermined(e.reason))
        return report
    report.add("standardisation", std.to_dict())
    report.set_verdict(std.verdict)
    return report


def tilting(args: Namespace, ctx: Context) -> Report:
    t = ctx.module(args.module)
    report = Report("tilting", {"module": t.name})
    report.set_verdict(tilting_check(t, ctx.cap, ctx.resolution_cap))
    return report


def iyama_command(args: Namespace, ctx: Context) -> Report:
    a = ctx.algebra
    x = ctx.module(args.module)
    report = Report("iyama", {"module": x.name})
    try:
        result = iyama(a, x, ctx.jobs, ctx.max_qh_simples)
    except UndecidedError as e:
        report.set_verdict(Verdict.undetermined(e.reason))
        return report
    report.add("construction", result.to_dict())
    report.set_verdict(result.verdict)
    return report


def hwt_chain(args: Namespace, ctx: Context) -> Report:
    a = ctx.algebra
    ordering = ctx.ordering(args.ordering)
    report = Report("hwt-chain", {"ordering": ordering.labels(a)})
    verdict, stages = hwt_chain_report(a, ordering, ctx.cap, ctx.resolution_cap)
    report.add("stages", [s.to_dict() for s in stages])
    if stages:
        deltas = standard_modules(a, ordering)
        report.add("delta_via_recollement", [
            iso_test(delta_via_recollement(a, ordering, k), deltas[k]).truth.value for k in range(len(ordering))
        ])
        report.add("stage_ext", stage_ext_comparison(a, ordering, ctx.cap, ctx.resolution_cap).to_dict())
        report.add("ext_bound", ext_bound_check(a, ctx.resolution_cap).to_dict())
    report.set_verdict(verdict)
    return report
