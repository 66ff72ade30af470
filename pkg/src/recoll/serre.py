"""
Serre subcategories of mod Λ and the idempotents cutting them out.
"""

import logging
from typing import Sequence, Tuple

from src.algebra import Algebra, Ideal
from src.kernel import Matrix, Subspace, flatten
from src.modcat import Module, composition_factors, projective_modules, simple_modules
from src.utils.verdict import Verdict
from .recollement import annihilated_space, recollement

logger = logging.getLogger(__name__)


def annihilator(m: Module) -> Subspace:
    """ann(M) = {λ : M·λ = 0} as a subspace of Λ."""
    a = m.algebra
    if m.dim == 0:
        return Subspace.whole(a.dim, a.field)
    stacked = Matrix.from_row_vectors([flatten(rho) for rho in m.actions], m.dim * m.dim, a.field)
    return Subspace(stacked.left_kernel())


def annihilator_intersection(a: Algebra, modules: Sequence[Module]) -> Ideal:
    """∩ ann(M) over ``modules``; Λ itself when the list is empty."""
    space = Subspace.whole(a.dim, a.field)
    for m in modules:
        space = space.intersection(annihilator(m))
    return Ideal(a, space)


def serre_idempotent(a: Algebra, subset: Sequence[int]) -> Tuple[Tuple[int, ...], Verdict]:
    """
    The idempotent e whose quotient Λ/ΛeΛ has module category the Serre
    subcategory of modules with composition factors in ``subset``.

    e is the sum of the idempotents of the vertices outside ``subset``. The
    verdict records two checks: a simple or indecomposable projective is
    killed by ΛeΛ exactly when its composition factors lie in ``subset``,
    and ΛeΛ equals the intersection of the annihilators of those simples
    and of Λ/ΛeΛ.
    """
    inside = set(subset)
    vertices = tuple(v for v in range(a.n_vertices) if v not in inside)
    rd = recollement(a, vertices)
    simples = simple_modules(a)

    mismatched = []
    for m in list(simples) + list(projective_modules(a)):
        killed = annihilated_space(rd, m).dim == m.dim
        factors = composition_factors(m)
        within = all(not c for v, c in enumerate(factors) if v not in inside)
        if killed != within:
            mismatched.append(m.name)

    kept = [simples[v] for v in sorted(inside)] + [rd.quotient_bimodule.module]
    intersection = annihilator_intersection(a, kept)
    witness = {"idempotent": rd.label, "ideal_dim": rd.ideal.dim}
    if mismatched:
        return vertices, Verdict.false(f"membership disagrees on {', '.join(mismatched)}", witness)
    if intersection != rd.ideal:
        return vertices, Verdict.false(f"annihilator intersection has dimension {intersection.dim}", witness)
    logger.debug(f"Serre subcategory {sorted(inside)} cut out by {rd.label}")
    return vertices, Verdict.true(f"cut out by {rd.label}", witness)
