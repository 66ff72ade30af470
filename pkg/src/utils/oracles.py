"""
Independent oracles for cross-checking the homological machinery.

``derivation_ext1_dim`` computes Ext^1(X, Y) without resolutions: an
extension 0 -> Y -> E -> X -> 0 is E = X ⊕ Y with actions
[[ρ_X(b), D(b)], [0, ρ_Y(b)]], the block D ranges over the derivations
D(b_i b_j) = ρ_X(b_i) D(b_j) + D(b_i) ρ_Y(b_j), and changing the splitting
adds the inner derivations ρ_X(b) H - H ρ_Y(b).

``filtration_search`` decides Filt membership by trying every injective
map from every Δ over a finite field.

Not re-exported from ``src.utils``.
"""

import itertools
import logging
from typing import Dict, Optional, Sequence, Tuple

from src.kernel import Matrix, flatten, sparse_kernel
from src.modcat import HomSpace, Module, cokernel
from .exceptions import IncompatibleAlgebraError

logger = logging.getLogger(__name__)


def derivation_ext1_dim(x: Module, y: Module) -> int:
    if x.algebra is not y.algebra:
        raise IncompatibleAlgebraError("derivation_ext1_dim")
    a = x.algebra
    K = x.field
    dx, dy, n = x.dim, y.dim, a.dim
    if dx == 0 or dy == 0:
        return 0
    block = dx * dy
    total = n * block

    def var(k: int, r: int, c: int) -> int:
        return k * block + r * dy + c

    rho_x = [m.to_lists() for m in x.actions]
    rho_y = [m.to_lists() for m in y.actions]
    equations = []
    for i in sorted(set(a.generators) | set(a.idempotents)):
        for j in range(n):
            product = a.basis_product(i, j)
            for r in range(dx):
                for c in range(dy):
                    eq: Dict[int, object] = {}

                    def add(idx: int, coeff):
                        eq[idx] = eq.get(idx, K.zero) + coeff

                    for k, coeff in enumerate(product):
                        if coeff:
                            add(var(k, r, c), coeff)
                    for s in range(dx):
                        if rho_x[i][r][s]:
                            add(var(j, s, c), -rho_x[i][r][s])
                    for s in range(dy):
                        if rho_y[j][s][c]:
                            add(var(i, r, s), -rho_y[j][s][c])
                    equations.append(eq)
    cocycles = len(sparse_kernel(equations, total, K))

    inner = []
    for r in range(dx):
        for c in range(dy):
            h = Matrix.zeros(dx, dy, K).to_lists()
            h[r][c] = K.one
            hm = Matrix._raw(h, (dx, dy), K)
            vec = []
            for k in range(n):
                vec.extend(flatten(x.actions[k] @ hm - hm @ y.actions[k]))
            inner.append(tuple(vec))
    coboundaries = Matrix.from_row_vectors(inner, total, K).rank()
    logger.debug(f"Derivations {x.name} -> {y.name}: cocycles {cocycles}, coboundaries {coboundaries}")
    return cocycles - coboundaries


def filtration_search(x: Module, deltas: Sequence[Module], _memo: Optional[Dict[Tuple, bool]] = None) -> bool:
    """X has a filtration with subquotients among ``deltas``, in any order. Prime fields only."""
    if x.dim == 0:
        return True
    memo = {} if _memo is None else _memo
    key = (x.dims, tuple(flatten(m) for m in x.actions))
    if key in memo:
        return memo[key]
    elements = x.field.elements()
    found = False
    for d in deltas:
        if d.dim == 0 or d.dim > x.dim or any(dv > xv for dv, xv in zip(d.dims, x.dims)):
            continue
        hom = HomSpace(d, x)
        for coeffs in itertools.product(elements, repeat=hom.dim):
            f = hom.combine(coeffs)
            if not f.is_injective():
                continue
            rest, _ = cokernel(f)
            if filtration_search(rest, deltas, memo):
                found = True
                break
        if found:
            break
    memo[key] = found
    return found
