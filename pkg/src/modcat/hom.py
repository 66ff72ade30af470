"""
Hom spaces as solution spaces of the intertwining equations.
"""

import logging
from typing import Dict, List, Optional, Tuple

from src.kernel import CoordinateSystem, Matrix, Subspace, flatten, sparse_kernel
from src.utils.exceptions import IncompatibleAlgebraError
from .calculus import submodule_from_space, sum_of_images
from .module import DirectSum, Module, ModuleMap, power

logger = logging.getLogger(__name__)


def hom_space(m: Module, n: Module) -> List[ModuleMap]:
    """
    Basis of Hom(M, N).

    Unknowns are the vertex blocks F_v (dim M e_v x dim N e_v); one matrix
    equation ρ_M(b)·F_t = F_s·ρ_N(b) per generator b in e_s Λ e_t.
    """
    if m.algebra is not n.algebra:
        raise IncompatibleAlgebraError("hom_space")
    a = m.algebra
    K = a.field
    if m.dim == 0 or n.dim == 0:
        return []

    offsets_m, offsets_n = m.offsets(), n.offsets()
    base: List[int] = []
    total = 0
    for v in range(a.n_vertices):
        base.append(total)
        total += m.dims[v] * n.dims[v]
    if total == 0:
        return []

    def var(v: int, r: int, c: int) -> int:
        return base[v] + r * n.dims[v] + c

    equations: List[Dict[int, object]] = []
    for g in a.generators:
        s, t = a.blocks[g]
        if not (m.dims[s] or m.dims[t]) or not (n.dims[s] or n.dims[t]):
            continue
        rho_m = m.actions[g].to_lists()
        rho_n = n.actions[g].to_lists()
        for r in range(m.dims[s]):
            row_m = rho_m[offsets_m[s] + r]
            for c in range(n.dims[t]):
                eq: Dict[int, object] = {}
                for k in range(m.dims[t]):
                    coeff = row_m[offsets_m[t] + k]
                    if coeff:
                        idx = var(t, k, c)
                        eq[idx] = eq.get(idx, K.zero) + coeff
                for k in range(n.dims[s]):
                    coeff = rho_n[offsets_n[s] + k][offsets_n[t] + c]
                    if coeff:
                        idx = var(s, r, k)
                        eq[idx] = eq.get(idx, K.zero) - coeff
                if eq:
                    equations.append(eq)

    solutions = sparse_kernel(equations, total, K)
    maps = []
    for sol in solutions:
        rows = [[K.zero] * n.dim for _ in range(m.dim)]
        for v in range(a.n_vertices):
            for r in range(m.dims[v]):
                for c in range(n.dims[v]):
                    x = sol[var(v, r, c)]
                    if x:
                        rows[offsets_m[v] + r][offsets_n[v] + c] = x
        maps.append(ModuleMap(m, n, Matrix._raw(rows, (m.dim, n.dim), K)))
    logger.debug(f"dim Hom({m.name}, {n.name}) = {len(maps)}")
    return maps


def hom_dimension(m: Module, n: Module) -> int:
    return len(hom_space(m, n))


def trace_space(target: Module, source: Module) -> Subspace:
    return sum_of_images(target, hom_space(source, target))


def trace_submodule(target: Module, source: Module) -> Tuple[Module, ModuleMap]:
    """Σ of the images of all maps source -> target."""
    return submodule_from_space(target, trace_space(target, source),
                                f"tr_{source.name}({target.name})")


def evaluation_map(d: Module, x: Module) -> Tuple[Optional[DirectSum], Optional[ModuleMap]]:
    """
    The evaluation D^r -> X, r = dim Hom(D, X), sending the i-th copy of D
    through the i-th basis map. Returns the sum D^r with the map.
    """
    basis = hom_space(d, x)
    if not basis:
        return None, None
    ds = power(d, len(basis))
    matrix = Matrix.zeros(ds.module.dim, x.dim, x.field)
    for proj, f in zip(ds.projections, basis):
        matrix = matrix + proj.matrix @ f.matrix
    return ds, ModuleMap(ds.module, x, matrix)


class HomSpace:
    """
    Hom(M, N) with coordinates: any map in the span is expressed in the
    basis of ``hom_space`` by reading a set of pivot entries.
    """

    def __init__(self, source: Module, target: Module):
        self.source = source
        self.target = target
        self.maps = hom_space(source, target)
        self._coords = CoordinateSystem([flatten(f.matrix) for f in self.maps],
                                        source.dim * target.dim, source.field)

    @property
    def dim(self) -> int:
        return len(self.maps)

    def coordinates(self, matrix: Matrix):
        """Coordinates of a map given by its matrix, or None when it is not a homomorphism."""
        return self._coords.coordinates(flatten(matrix))

    def combine(self, coeffs) -> ModuleMap:
        K = self.source.field
        matrix = Matrix.zeros(self.source.dim, self.target.dim, K)
        for c, f in zip(coeffs, self.maps):
            if c:
                matrix = matrix + f.matrix.scale(c)
        return ModuleMap(self.source, self.target, matrix)
