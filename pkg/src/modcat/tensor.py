"""
Bimodules and tensor products over an algebra.

A B-A-bimodule is stored as a right A-module together with the left action
of every basis element of B. Left actions act on row vectors too: the
matrix L_b has row k equal to b·m_k, so b·m = m·L_b and L_{b1 b2} = L_{b2} L_{b1}.
Every basis vector is homogeneous for the left idempotents.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from src.algebra import Algebra, Ideal, corner_algebra, ground_algebra
from src.kernel import Matrix, Subspace, complement_projection
from src.utils.exceptions import DimensionMismatchError, IncompatibleAlgebraError
from .module import Module, ModuleMap, regular_indices, regular_module

logger = logging.getLogger(__name__)


class Bimodule:
    """
    Args:
        left: algebra acting on the left
        module: the underlying right module
        left_actions: one matrix per basis element of ``left``
        left_vertex: left vertex of every basis vector of ``module``
    """

    def __init__(self, left: Algebra, module: Module, left_actions: Sequence[Matrix], left_vertex: Sequence[int]):
        self.left = left
        self.module = module
        self.left_actions: Tuple[Matrix, ...] = tuple(left_actions)
        self.left_vertex: Tuple[int, ...] = tuple(left_vertex)
        if len(self.left_actions) != left.dim:
            raise DimensionMismatchError(left.dim, len(self.left_actions), "left action count")
        if len(self.left_vertex) != module.dim:
            raise DimensionMismatchError(module.dim, len(self.left_vertex), "left vertex count")

    @property
    def right(self) -> Algebra:
        return self.module.algebra

    @property
    def dim(self) -> int:
        return self.module.dim

    @property
    def name(self) -> str:
        return self.module.name

    def act_left(self, element: Sequence) -> Matrix:
        result = Matrix.zeros(self.dim, self.dim, self.module.field)
        for k, c in enumerate(element):
            if c:
                result = result + self.left_actions[k].scale(c)
        return result

    def check(self) -> bool:
        """Left action is a unital anti-representation commuting with the right action."""
        b = self.left
        for i in range(b.dim):
            for j in range(b.dim):
                if self.left_actions[j] @ self.left_actions[i] != self.act_left(b.basis_product(i, j)):
                    return False
        if self.act_left(b.one()) != Matrix.identity(self.dim, self.module.field):
            return False
        return all(l @ r == r @ l for l in self.left_actions for r in self.module.actions)


def _permuted_left(a: Algebra, indices: Sequence[int], acting: Sequence[int]) -> List[Matrix]:
    """Left multiplication by the ``acting`` basis elements on span{b_k : k in indices}."""
    return [a.left[i].extract(indices, indices) for i in acting]


def regular_bimodule(a: Algebra) -> Bimodule:
    """Λ as a Λ-Λ-bimodule."""
    m = regular_module(a)
    indices = regular_indices(a)
    return Bimodule(a, m, _permuted_left(a, indices, range(a.dim)), [a.source(k) for k in indices])


def quotient_bimodule(a: Algebra, ideal: Ideal, name: Optional[str] = None) -> Bimodule:
    """Λ/I as a Λ-Λ-bimodule; the basis is formed by basis elements of Λ outside I."""
    reg = regular_bimodule(a)
    indices = regular_indices(a)
    position = {k: p for p, k in enumerate(indices)}
    rows = [tuple(v[k] for k in indices) for v in ideal.vectors()]
    order = [position[k] for k in reversed(range(a.dim)) if k not in set(a.idempotents)]
    order += [position[k] for k in a.idempotents]
    kept, proj = complement_projection(Matrix.from_row_vectors(rows, a.dim, a.field), order)
    vertex = reg.module.vertex_of()
    dims = [0] * a.n_vertices
    for q in kept:
        dims[vertex[q]] += 1
    actions = [rho.rows_at(kept) @ proj for rho in reg.module.actions]
    quot = Module(a, dims, actions, name or f"Λ/I{ideal.dim}")
    quot.basis_labels = tuple(reg.module.basis_labels[q] for q in kept)
    lefts = [l.rows_at(kept) @ proj for l in reg.left_actions]
    return Bimodule(a, quot, lefts, [reg.left_vertex[q] for q in kept])


def corner_indices(a: Algebra, vertices: Sequence[int]) -> List[int]:
    """Basis elements of eΛ in the order of the eΛ module basis."""
    chosen = set(vertices)
    return sorted((k for k in range(a.dim) if a.source(k) in chosen), key=lambda k: (a.target(k), k))


def corner_bimodule(a: Algebra, vertices: Sequence[int]) -> Bimodule:
    """
    eΛ as an eΛe-Λ-bimodule, e the sum of the idempotents of ``vertices``.
    Cached per vertex set, so ``bim.left`` is the same corner algebra on
    every call.
    """
    chosen = tuple(sorted(set(vertices)))

    def build() -> Bimodule:
        corner, cidx = corner_algebra(a, chosen)
        indices = corner_indices(a, chosen)
        dims = [sum(1 for k in indices if a.target(k) == w) for w in range(a.n_vertices)]
        actions = [a.right[j].extract(indices, indices) for j in range(a.dim)]
        m = Module(a, dims, actions, "eΛ")
        m.basis_labels = tuple(a.labels[k] for k in indices)
        vmap = {v: i for i, v in enumerate(chosen)}
        return Bimodule(corner, m, _permuted_left(a, indices, cidx), [vmap[a.source(k)] for k in indices])

    return a.cache(f"corner_bimodule{chosen}", build)


def left_module(b: Algebra, dim: int, left_actions: Sequence[Matrix], left_vertex: Sequence[int]) -> Bimodule:
    """A left B-module, as a B-k-bimodule."""
    k = ground_algebra(b.field)
    ident = Matrix.identity(dim, b.field)
    m = Module(k, [dim], [ident], "Y")
    return Bimodule(b, m, left_actions, left_vertex)


@dataclass
class TensorData:
    """
    X ⊗_B M as a quotient of the span of the pairs x_i ⊗ m_k with matching
    vertices.

    Attributes:
        module: the tensor product as a right A-module
        pairs: (i, k) of every spanning pair, in the order of the ambient basis
        kept: ambient positions whose classes form the basis of ``module``
        projection: ambient -> module
    """
    module: Module
    pairs: List[Tuple[int, int]]
    kept: Tuple[int, ...]
    projection: Matrix

    def index(self) -> Dict[Tuple[int, int], int]:
        return {p: n for n, p in enumerate(self.pairs)}


def tensor_data(x: Module, bim: Bimodule, name: Optional[str] = None) -> TensorData:
    """Balanced tensor product with the coordinates needed to tensor maps."""
    if x.algebra is not bim.left:
        raise IncompatibleAlgebraError("tensor_over")
    B, A = bim.left, bim.right
    K = x.field
    xv = x.vertex_of()
    mv = bim.module.vertex_of()
    pairs = sorted(((i, k) for i in range(x.dim) for k in range(bim.dim) if xv[i] == bim.left_vertex[k]),
                   key=lambda p: (mv[p[1]], p[0], p[1]))
    index = {p: n for n, p in enumerate(pairs)}
    n = len(pairs)

    # x_i b ⊗ m_k - x_i ⊗ b m_k for generators b in e_s B e_t
    relations = []
    for g in B.generators:
        s, t = B.blocks[g]
        rho = x.actions[g].to_lists()
        lam = bim.left_actions[g].to_lists()
        for i in x.block(s):
            for k in range(bim.dim):
                if bim.left_vertex[k] != t:
                    continue
                row = [K.zero] * n
                for i2 in x.block(t):
                    c = rho[i][i2]
                    if c:
                        row[index[(i2, k)]] += c
                for k2 in range(bim.dim):
                    c = lam[k][k2]
                    if c and (i, k2) in index:
                        row[index[(i, k2)]] -= c
                if any(row):
                    relations.append(tuple(row))

    dims_ambient = [0] * A.n_vertices
    for _, k in pairs:
        dims_ambient[mv[k]] += 1
    # (x ⊗ m)·a = x ⊗ m·a
    amb_actions = []
    for j in range(A.dim):
        r = bim.module.actions[j].to_lists()
        rows = [[K.zero] * n for _ in range(n)]
        for p, (i, k) in enumerate(pairs):
            for k2 in range(bim.dim):
                c = r[k][k2]
                if c:
                    rows[p][index[(i, k2)]] = c
        amb_actions.append(Matrix._raw(rows, (n, n), K))

    kept, proj = complement_projection(Matrix.from_row_vectors(relations, n, K))
    dims = [0] * A.n_vertices
    for q in kept:
        dims[mv[pairs[q][1]]] += 1
    actions = [rho.rows_at(kept) @ proj for rho in amb_actions]
    module = Module(A, dims, actions, name or f"{x.name}⊗{bim.name}")
    logger.debug(f"Tensor {x.name} ⊗ {bim.name}: {n} pairs, {len(relations)} relations, dim {module.dim}")
    return TensorData(module, pairs, kept, proj)


def tensor_over(x: Module, bim: Bimodule, name: Optional[str] = None) -> Module:
    """X ⊗_B M for a right B-module X and a B-A-bimodule M."""
    return tensor_data(x, bim, name).module


def tensor_map(f: ModuleMap, bim: Bimodule,
               source: Optional[TensorData] = None, target: Optional[TensorData] = None) -> ModuleMap:
    """f ⊗ 1 between the tensor products of source and target."""
    src = source or tensor_data(f.source, bim)
    tgt = target or tensor_data(f.target, bim)
    K = f.source.field
    F = f.matrix.to_lists()
    tindex = tgt.index()
    rows = []
    for q in src.kept:
        i, k = src.pairs[q]
        acc = [K.zero] * tgt.module.dim
        for i2, c in enumerate(F[i]):
            if c and (i2, k) in tindex:
                for r, y in enumerate(tgt.projection.row(tindex[(i2, k)])):
                    if y:
                        acc[r] += c * y
        rows.append(tuple(acc))
    return ModuleMap(src.module, tgt.module, Matrix.from_row_vectors(rows, tgt.module.dim, K))
