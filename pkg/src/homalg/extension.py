"""
Extensions realised as pushouts of the first syzygy sequence
0 -> Ω -> P_0 -> X -> 0 along cocycles Ω -> Y.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from src.kernel import Matrix, Subspace, solve
from src.modcat import (
    HomSpace,
    Module,
    ModuleMap,
    SES,
    direct_sum,
    factor_through,
    hom_dimension,
    lift_through,
    power,
    quotient_module,
    zero_module,
)
from src.utils.exceptions import AlgebraError, UndecidedError
from src.utils.verdict import Verdict
from .ext import ExtClass, ExtSpace, ext_dim
from .resolution import min_resolution

logger = logging.getLogger(__name__)


def _pushout(x: Module, y: Module, phi: ModuleMap, name: str) -> SES:
    """
    E = (P_0 ⊕ Y) / {(ι w, -φ w)} for the first syzygy ι: Ω -> P_0 of X and
    a map φ: Ω -> Y; returns 0 -> Y -> E -> X -> 0.
    """
    res = min_resolution(x, 1)
    cover = res.covers[0]
    omega, iota = res.syzygy(1)
    p0 = cover.source
    ds = direct_sum([p0, y])
    inc_p, inc_y = ds.inclusions
    relations = iota.matrix @ inc_p.matrix - phi.matrix @ inc_y.matrix
    e, q = quotient_module(ds.module, Subspace(relations), name)
    left = ModuleMap(y, e, inc_y.matrix @ q.matrix)
    # (p, y) -> π(p) vanishes on the relations since π ι = 0
    right = factor_through(q, ds.projections[0].then(cover))
    return SES(left, right)


def yoneda_extension(c: ExtClass) -> SES:
    """0 -> Y -> E -> X -> 0 whose connecting class is c (split for the zero class)."""
    if c.degree != 1:
        raise AlgebraError(f"yoneda_extension needs a degree-1 class, got degree {c.degree}")
    x, y = c.source, c.target
    if x.dim == 0:
        return SES(ModuleMap.identity(y), ModuleMap.zero(y, x))
    ses = _pushout(x, y, c.cocycle, f"E({x.name},{y.name})")
    logger.debug(f"Yoneda extension of {x.name} by {y.name}: dim {ses.middle.dim}")
    return ses


def lift_to_projective(f: ModuleMap, surjection: ModuleMap) -> Optional[ModuleMap]:
    """g: P -> B with g·surjection = f for a map f: P -> C from a projective P."""
    hom = HomSpace(f.source, surjection.source)
    if hom.dim == 0:
        return ModuleMap.zero(f.source, surjection.source) if f.is_zero() else None
    K = f.source.field
    # unknown coefficients c with Σ c_k G_k S = F
    images = [tuple(x for row in (g.matrix @ surjection.matrix).row_vectors() for x in row) for g in hom.maps]
    target = tuple(x for row in f.matrix.row_vectors() for x in row)
    system = Matrix.from_row_vectors(images, len(target), K).transpose()
    sol = solve(system, target).solution
    if sol is None:
        return None
    return hom.combine(sol)


def connecting_class(ses: SES, cap: int = 32) -> ExtClass:
    """The class of 0 -> A -> B -> C -> 0 in Ext^1(C, A)."""
    a, c = ses.sub, ses.quotient
    space = ExtSpace(c, a, 1, max(cap, 1))
    K = c.field
    if c.dim == 0 or space.dim == 0:
        return space.element([K.zero] * space.dim)
    res = min_resolution(c, 1)
    cover = res.covers[0]
    omega, iota = res.syzygy(1)
    g = lift_to_projective(cover, ses.right)
    if g is None:
        raise AlgebraError("sequence is not exact: the cover does not lift")
    restricted = iota.then(g)
    phi = lift_through(ses.left, restricted)
    if phi is None:
        raise AlgebraError("sequence is not exact: the syzygy does not land in the kernel")
    coords = space.coordinates(phi.matrix)
    return space.element(coords)


def universal_extension(x: Module, y: Module, cap: int = 32) -> Tuple[Module, SES, int]:
    """
    0 -> Y^r -> E -> X -> 0 with r = dim Ext^1(X, Y), the pushout along all
    basis cocycles at once, so that every class of Ext^1(X, Y) is induced
    from Hom(Y^r, Y).

    Raises:
        UndecidedError: End(Y) is not one-dimensional
    """
    if hom_dimension(y, y) != 1:
        raise UndecidedError(f"End({y.name}) is not the base field")
    space = ExtSpace(x, y, 1, max(cap, 1))
    r = space.dim
    if r == 0:
        z = zero_module(x.algebra)
        return x, SES(ModuleMap.zero(z, x), ModuleMap.identity(x)), 0
    yr = power(y, r)
    omega = space.omega
    diagonal = Matrix.zeros(omega.dim, yr.module.dim, x.field)
    for cls, inc in zip(space.classes(), yr.inclusions):
        diagonal = diagonal + cls.cocycle.matrix @ inc.matrix
    phi = ModuleMap(omega, yr.module, diagonal)
    ses = _pushout(x, yr.module, phi, f"U({x.name};{y.name})")
    logger.debug(f"Universal extension of {x.name} by {y.name}^{r}: dim {ses.middle.dim}")
    return ses.middle, ses, r


def les_check(ses: SES, t: Module, max_degree: int, cap: int = 32) -> Verdict:
    """
    Dimension consistency of the long exact sequence
    0 -> Hom(C,T) -> Hom(B,T) -> Hom(A,T) -> Ext^1(C,T) -> ... up to max_degree:
    the alternating sum of any exact segment starting at 0 must leave a
    non-negative remainder that is realised as the rank of the next map.
    """
    dims: List[int] = []
    try:
        for p in range(max_degree + 1):
            dims.extend([ext_dim(ses.quotient, t, p, cap), ext_dim(ses.middle, t, p, cap), ext_dim(ses.sub, t, p, cap)])
    except UndecidedError as e:
        return Verdict.undetermined(e.reason)
    # ranks r_k of the maps out of each term: r_k = dims[k] - r_{k-1}, all within [0, dims[k+1]]
    incoming = 0
    for k, d in enumerate(dims):
        outgoing = d - incoming
        if outgoing < 0 or (k + 1 < len(dims) and outgoing > dims[k + 1]):
            return Verdict.false(f"long exact sequence fails at term {k}", {"dims": dims})
        incoming = outgoing
    return Verdict.true("Ext dimensions fit a long exact sequence", {"dims": dims}).with_cap(max_degree)
