"""
Projective covers.
"""

import logging
from typing import List, Tuple

from src.kernel import Matrix, Subspace, Vector
from .calculus import radical_space
from .module import Module, ModuleMap, direct_sum, projective_indices, projective_modules, zero_module

logger = logging.getLogger(__name__)


def _generator_image(m: Module, v: int, x: Vector) -> Matrix:
    """Rows x·b_k for the basis b_k of e_v Λ: the map P_v -> M, e_v -> x."""
    rows = [m.actions[k].apply_row(x) for k in projective_indices(m.algebra, v)]
    return Matrix.from_row_vectors(rows, m.dim, m.field)


def top_generators(m: Module) -> List[Tuple[int, Vector]]:
    """
    Vertex-homogeneous elements whose classes form a minimal generating set
    of M: each is added only if it is not already in rad M plus what the
    previous ones generate.
    """
    K = m.field
    covered = radical_space(m)
    gens: List[Tuple[int, Vector]] = []
    vertex = m.vertex_of()
    for q in covered.complement_indices():
        unit = tuple(K.one if i == q else K.zero for i in range(m.dim))
        if covered.contains(unit):
            continue
        v = vertex[q]
        gens.append((v, unit))
        covered = covered + Subspace(_generator_image(m, v, unit))
    return gens


def projective_cover(m: Module) -> ModuleMap:
    """
    Minimal epimorphism ⊕ P_v^{m_v} -> M. Summands appear in vertex order;
    the kernel lies in the radical of the cover.
    """
    a = m.algebra
    if m.dim == 0:
        z = zero_module(a)
        return ModuleMap(z, m, Matrix.zeros(0, 0, m.field))
    gens = top_generators(m)
    projectives = projective_modules(a)
    ds = direct_sum([projectives[v] for v, _ in gens], f"P({m.name})")
    matrix = Matrix.zeros(ds.module.dim, m.dim, m.field)
    for proj, (v, x) in zip(ds.projections, gens):
        matrix = matrix + proj.matrix @ _generator_image(m, v, x)
    cover = ModuleMap(ds.module, m, matrix)
    logger.debug(f"Projective cover of {m.name}: {[a.vertex_labels[v] for v, _ in gens]} (dim {ds.module.dim})")
    return cover


def cover_multiplicities(m: Module) -> List[int]:
    """Number of copies of each P_v in the projective cover."""
    counts = [0] * m.algebra.n_vertices
    for v, _ in top_generators(m):
        counts[v] += 1
    return counts


def is_projective(m: Module) -> bool:
    """The projective cover is an isomorphism."""
    if m.dim == 0:
        return True
    return projective_cover(m).source.dim == m.dim
