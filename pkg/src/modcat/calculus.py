"""
Sub/quotient calculus of mod Λ: kernels, images, cokernels, generated
submodules, radicals, tops, socles and Loewy layers.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from src.algebra import radical
from src.kernel import Matrix, Subspace, Vector, complement_projection, invariant_closure, solve_rows
from src.utils.exceptions import DimensionMismatchError
from .module import Module, ModuleMap, regular_indices, regular_module

logger = logging.getLogger(__name__)


def submodule_from_space(m: Module, space: Subspace, name: Optional[str] = None) -> Tuple[Module, ModuleMap]:
    """
    Submodule on an invariant subspace. Its RREF basis is already sorted by
    vertex blocks because the subspace is stable under every e_v.
    """
    basis = space.basis
    pivots = space.pivots
    vertex = m.vertex_of()
    dims = [0] * m.algebra.n_vertices
    for p in pivots:
        dims[vertex[p]] += 1
    actions = [(basis @ rho).cols_at(pivots) for rho in m.actions]
    sub = Module(m.algebra, dims, actions, name or f"sub({m.name})")
    return sub, ModuleMap(sub, m, basis)


def submodule_generated(m: Module, vectors: Sequence[Vector], name: Optional[str] = None) -> Tuple[Module, ModuleMap]:
    """Smallest submodule containing ``vectors``."""
    space = invariant_closure(list(vectors), m.actions, m.dim, m.field)
    return submodule_from_space(m, space, name)


def quotient_module(m: Module, space: Subspace, name: Optional[str] = None) -> Tuple[Module, ModuleMap]:
    """M / W for an invariant subspace W, with the projection."""
    if space.ambient != m.dim:
        raise DimensionMismatchError(m.dim, space.ambient, "subspace ambient dimension")
    kept, proj = complement_projection(space.basis)
    vertex = m.vertex_of()
    dims = [0] * m.algebra.n_vertices
    for q in kept:
        dims[vertex[q]] += 1
    actions = [rho.rows_at(kept) @ proj for rho in m.actions]
    quot = Module(m.algebra, dims, actions, name or f"{m.name}/W")
    return quot, ModuleMap(m, quot, proj)


def image_space(f: ModuleMap) -> Subspace:
    return Subspace(f.matrix)


def kernel(f: ModuleMap, name: Optional[str] = None) -> Tuple[Module, ModuleMap]:
    space = Subspace(f.matrix.left_kernel())
    return submodule_from_space(f.source, space, name or f"ker({f.source.name}->{f.target.name})")


def image(f: ModuleMap, name: Optional[str] = None) -> Tuple[Module, ModuleMap, ModuleMap]:
    """im f with its inclusion into the target and the corestriction source -> im f."""
    space = image_space(f)
    sub, inclusion = submodule_from_space(f.target, space, name or f"im({f.source.name}->{f.target.name})")
    corestriction = ModuleMap(f.source, sub, f.matrix.cols_at(space.pivots))
    return sub, inclusion, corestriction


def cokernel(f: ModuleMap, name: Optional[str] = None) -> Tuple[Module, ModuleMap]:
    return quotient_module(f.target, image_space(f), name or f"coker({f.source.name}->{f.target.name})")


def sum_of_images(target: Module, maps: Sequence[ModuleMap]) -> Subspace:
    rows: List[Vector] = []
    for f in maps:
        rows.extend(f.matrix.row_vectors())
    return Subspace.span(rows, target.dim, target.field)


def radical_space(m: Module) -> Subspace:
    """M·J."""
    def build():
        j = radical(m.algebra)
        rows: List[Vector] = []
        for x in j.vectors():
            rows.extend(m.act(x).row_vectors())
        return Subspace.span(rows, m.dim, m.field)
    return m.cache("radical_space", build)


def rad(m: Module) -> Tuple[Module, ModuleMap]:
    return submodule_from_space(m, radical_space(m), f"rad {m.name}")


def top(m: Module) -> Tuple[Module, ModuleMap]:
    return quotient_module(m, radical_space(m), f"top {m.name}")


def socle_space(m: Module) -> Subspace:
    """{v : v·J = 0}."""
    j = radical(m.algebra)
    if j.dim == 0 or m.dim == 0:
        return Subspace.whole(m.dim, m.field)
    stacked = m.act(j.vectors()[0]).hstack(*(m.act(x) for x in j.vectors()[1:]))
    return Subspace(stacked.left_kernel())


def soc(m: Module) -> Tuple[Module, ModuleMap]:
    return submodule_from_space(m, socle_space(m), f"soc {m.name}")


def top_vector(m: Module) -> List[int]:
    """dim of top(M) e_v per vertex."""
    space = radical_space(m)
    vertex = m.vertex_of()
    counts = [0] * m.algebra.n_vertices
    for q in space.complement_indices():
        counts[vertex[q]] += 1
    return counts


def loewy_series(m: Module) -> List[List[int]]:
    """Dimension vectors of the radical layers M J^k / M J^{k+1}, top first."""
    layers: List[List[int]] = []
    current = m
    while current.dim:
        layers.append(top_vector(current))
        current, _ = rad(current)
        if len(layers) > m.dim:
            break
    return layers


def simple_dimensions(a) -> List[int]:
    """dim S_v per vertex (1 for split vertices)."""
    from .constructors import simple_modules
    return [s.dim for s in simple_modules(a)]


def composition_factors(m: Module) -> List[int]:
    """Multiplicity of each simple as a composition factor."""
    sizes = simple_dimensions(m.algebra)
    return [d // s if s else 0 for d, s in zip(m.dims, sizes)]


def is_submodule_space(m: Module, space: Subspace) -> bool:
    return all(space.is_invariant(rho) for rho in m.actions)


def ideal_module(ideal, name: Optional[str] = None) -> Tuple[Module, ModuleMap]:
    """A right ideal of Λ as a submodule of the regular module."""
    a = ideal.algebra
    indices = regular_indices(a)
    rows = [tuple(v[k] for k in indices) for v in ideal.vectors()]
    return submodule_from_space(regular_module(a), Subspace.span(rows, a.dim, a.field), name or f"I{ideal.dim}")


def factor_through(surjection: ModuleMap, f: ModuleMap) -> Optional[ModuleMap]:
    """g with surjection·g = f, when f vanishes on the kernel of the surjection."""
    section = solve_rows(surjection.matrix, Matrix.identity(surjection.target.dim, surjection.target.field))
    if section is None:
        return None
    g = section @ f.matrix
    if surjection.matrix @ g != f.matrix:
        return None
    return ModuleMap(surjection.target, f.target, g)


def lift_through(injection: ModuleMap, f: ModuleMap) -> Optional[ModuleMap]:
    """g with g·injection = f, when the image of f lies in the image of the injection."""
    g = solve_rows(injection.matrix, f.matrix)
    if g is None:
        return None
    return ModuleMap(f.source, injection.source, g)
