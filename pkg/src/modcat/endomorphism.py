"""
Endomorphism algebras of modules.

For M = X_1 ⊕ ... ⊕ X_r (the pieces of ``decompose``) the basis of End(M)
is assembled block by block: block (i, j) holds a basis of Hom(X_j, X_i),
and the identity of X_i is the idempotent of vertex i. The product is
composition, φ·ψ = φ∘ψ, so on matrices φ·ψ has matrix F_ψ·F_φ.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

from src.algebra import Algebra
from src.kernel import CoordinateSystem, Matrix, Subspace, Vector, flatten, single_eigenvalue
from .decompose import Decomposition, decompose
from .hom import hom_space
from .module import Module, ModuleMap, direct_sum

logger = logging.getLogger(__name__)


@dataclass
class EndomorphismAlgebra:
    """
    End(M) together with the matrices of its basis elements on M.

    Attributes:
        algebra: End(M) as an Algebra, one vertex per indecomposable piece
        module: M
        decomposition: the pieces giving the idempotents
        maps: endomorphism matrix of M for every basis element
    """
    algebra: Algebra
    module: Module
    decomposition: Decomposition
    maps: List[Matrix]

    def endomorphism(self, element: Sequence) -> ModuleMap:
        K = self.module.field
        matrix = Matrix.zeros(self.module.dim, self.module.dim, K)
        for k, c in enumerate(element):
            if c:
                matrix = matrix + self.maps[k].scale(c)
        return ModuleMap(self.module, self.module, matrix)

    def evaluate(self, element: Sequence, vector: Sequence) -> Vector:
        """φ(m): the pairing End(M) x M -> M."""
        return self.endomorphism(element).apply(vector)

    def hom_module(self, target: Module, name: Optional[str] = None) -> Module:
        """
        Hom(M, Y) as a right End(M)-module, f·φ = f∘φ. The basis is
        ⊕_i Hom(X_i, Y) over the pieces X_i, extended by zero on the others.
        """
        K = self.module.field
        projections = self.decomposition.projections()
        basis: List[Matrix] = []
        dims = []
        for piece, proj in zip(self.decomposition.pieces, projections):
            local = hom_space(piece.module, target)
            dims.append(len(local))
            basis.extend(proj @ f.matrix for f in local)
        system = CoordinateSystem([flatten(f) for f in basis], self.module.dim * target.dim, K)
        actions = []
        for phi in self.maps:
            rows = [system.coordinates(flatten(phi @ f)) for f in basis]
            actions.append(Matrix.from_row_vectors(rows, len(basis), K))
        return Module(self.algebra, dims, actions, name or f"Hom({self.module.name},{target.name})")


def _block_basis(x_source: Module, x_target: Module, same: bool) -> List[Matrix]:
    maps = [f.matrix for f in hom_space(x_source, x_target)]
    if not same:
        return maps
    K = x_source.field
    ident = Matrix.identity(x_source.dim, K)
    chosen = [ident]
    span = Subspace.span([flatten(ident)], x_source.dim * x_target.dim, K)
    for f in maps:
        if not span.contains(flatten(f)):
            chosen.append(f)
            span = span + Subspace.span([flatten(f)], span.ambient, K)
    return chosen


def endomorphism_algebra(m: Module, basic: bool = False, name: Optional[str] = None) -> EndomorphismAlgebra:
    """
    End(M) with idempotents from the decomposition of M.

    Args:
        m: a nonzero module
        basic: use one piece per isomorphism class (End of the basic module)

    Raises:
        UndecidedError: M cannot be decomposed
    """
    d = decompose(m)
    if basic and d.basic_count < d.count:
        rep_sum = direct_sum([rep for rep, _ in d.classes], f"basic({m.name})").module
        result = endomorphism_algebra(rep_sum, False, name or f"End(basic {m.name})")
        return result

    key = ("endomorphism_algebra", name)
    return m.cache(key, lambda: _build(m, d, name or f"End({m.name})"))


def _build(m: Module, d: Decomposition, name: str) -> EndomorphismAlgebra:
    K = m.field
    n = m.dim
    pieces = d.pieces
    r = len(pieces)
    projections = d.projections()

    maps: List[Matrix] = []
    blocks = []
    labels = []
    idempotents = [0] * r
    block_members = {}
    for i in range(r):
        for j in range(r):
            local = _block_basis(pieces[j].module, pieces[i].module, i == j)
            members = []
            for k, f in enumerate(local):
                if i == j and k == 0:
                    idempotents[i] = len(maps)
                    labels.append(f"ε{i + 1}")
                else:
                    labels.append(f"h{i + 1}{j + 1}" + (f".{k}" if len(local) > 1 else ""))
                members.append((len(maps), f))
                maps.append(projections[j] @ f @ pieces[i].inclusion.matrix)
                blocks.append((i, j))
            block_members[(i, j)] = members

    dim = len(maps)
    system = CoordinateSystem([flatten(x) for x in maps], n * n, K)

    def coords(x: Matrix) -> Vector:
        return system.coordinates(flatten(x))

    right = []
    for jdx in range(dim):
        rows = []
        for idx in range(dim):
            s, t = blocks[idx]
            t2, _ = blocks[jdx]
            if t != t2:
                rows.append(tuple(K.zero for _ in range(dim)))
            else:
                rows.append(coords(maps[jdx] @ maps[idx]))
        right.append(Matrix.from_row_vectors(rows, dim, K))

    hint = _radical_hint(d, block_members, dim, K) if d.split_local else None
    algebra = Algebra(K, labels, right, blocks, idempotents, [str(i + 1) for i in range(r)],
                      radical_hint=hint, name=name)
    logger.debug(f"{name}: dim {dim}, {r} pieces, {d.basic_count} iso classes")
    return EndomorphismAlgebra(algebra, m, d, maps)


def _radical_hint(d: Decomposition, block_members, dim: int, K) -> List[Vector]:
    """
    Non-isomorphisms between pieces. Within a block between isomorphic pieces
    they form the kernel of the scalar-part functional, read off after
    transporting to the class representative.
    """
    def unit(k: int, c=None, p: Optional[int] = None, cp=None) -> Vector:
        v = [K.zero] * dim
        v[k] = K.one if c is None else c
        if p is not None:
            v[p] -= cp
        return tuple(v)

    hint: List[Vector] = []
    for (i, j), members in block_members.items():
        pi, pj = d.pieces[i], d.pieces[j]
        if pi.iso_class != pj.iso_class:
            hint.extend(unit(k) for k, _ in members)
            continue
        to_i_inv = pi.from_representative.matrix.inverse()
        from_j = pj.from_representative.matrix
        values = [single_eigenvalue(from_j @ f @ to_i_inv) for _, f in members]
        pivot = next((q for q, lam in enumerate(values) if lam), None)
        for q, (k, _) in enumerate(members):
            if pivot is None:
                hint.append(unit(k))
            elif q != pivot:
                ratio = values[q] / values[pivot]
                hint.append(unit(k, None, members[pivot][0], ratio))
    return hint
