"""
Ext and Tor from minimal projective resolutions.

Ext^p(X, Y) for p >= 1 is computed on the syzygy: it is the cokernel of the
restriction Hom(P_{p-1}, Y) -> Hom(Ω^p, Y). Classes are represented by
cocycles Ω^p -> Y. Tor_p(X, M) for p >= 1 is the kernel of
Ω^p ⊗ M -> P_{p-1} ⊗ M.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from src.kernel import Matrix, Vector, complement_projection
from src.modcat import Bimodule, HomSpace, Module, ModuleMap, tensor_data, tensor_map
from src.utils.exceptions import IncompatibleAlgebraError, UndecidedError
from src.utils.verdict import Verdict
from .resolution import min_resolution

logger = logging.getLogger(__name__)


@dataclass
class ExtClass:
    """
    An element of Ext^p(X, Y).

    Attributes:
        degree: p
        source: X
        target: Y
        coordinates: coordinates in the basis of the computed Ext space
        cocycle: Ω^p(X) -> Y representing the class (X -> Y for p = 0)
    """
    degree: int
    source: Module
    target: Module
    coordinates: Vector
    cocycle: ModuleMap

    def is_zero(self) -> bool:
        return all(not c for c in self.coordinates)


class ExtSpace:
    """
    Ext^p(X, Y) with a basis of cocycles and coordinates of arbitrary
    cocycles.

    Raises:
        UndecidedError: the resolution of X does not reach degree p within the cap
    """

    def __init__(self, x: Module, y: Module, p: int, cap: int):
        if x.algebra is not y.algebra:
            raise IncompatibleAlgebraError("ext")
        self.source, self.target, self.degree = x, y, p
        K = x.field
        if p == 0:
            self.omega, self.inclusion = x, None
        else:
            res = min_resolution(x, max(cap, 0))
            if p - 1 >= len(res.covers) and not res.terminated:
                raise UndecidedError(f"Ext^{p}({x.name}, {y.name}): resolution cap {cap} reached")
            self.omega, self.inclusion = res.syzygy(p)
        self.cocycles = HomSpace(self.omega, y)
        rows = []
        if self.inclusion is not None and self.cocycles.dim:
            projective = self.inclusion.target
            for g in HomSpace(projective, y).maps:
                rows.append(self.cocycles.coordinates(self.inclusion.matrix @ g.matrix))
        d = self.cocycles.dim
        self._kept, self._projection = complement_projection(Matrix.from_row_vectors(rows, d, K))
        logger.debug(f"Ext^{p}({x.name}, {y.name}) = {len(self._kept)} (cocycles {d}, coboundaries {d - len(self._kept)})")

    @property
    def dim(self) -> int:
        return len(self._kept)

    def coordinates(self, cocycle: Matrix) -> Optional[Vector]:
        """Ext coordinates of a cocycle Ω^p -> Y given by its matrix."""
        coeffs = self.cocycles.coordinates(cocycle)
        if coeffs is None:
            return None
        return self._projection.apply_row(coeffs)

    def classes(self) -> List[ExtClass]:
        K = self.source.field
        out = []
        for idx, k in enumerate(self._kept):
            coords = tuple(K.one if i == idx else K.zero for i in range(self.dim))
            out.append(ExtClass(self.degree, self.source, self.target, coords, self.cocycles.maps[k]))
        return out

    def element(self, coordinates: Sequence) -> ExtClass:
        K = self.source.field
        matrix = Matrix.zeros(self.omega.dim, self.target.dim, K)
        for c, k in zip(coordinates, self._kept):
            if c:
                matrix = matrix + self.cocycles.maps[k].matrix.scale(c)
        return ExtClass(self.degree, self.source, self.target, tuple(K(c) for c in coordinates),
                        ModuleMap(self.omega, self.target, matrix))


def ext_space(x: Module, y: Module, p: int, cap: int = 32) -> ExtSpace:
    return ExtSpace(x, y, p, cap)


def ext(x: Module, y: Module, p: int, cap: int = 32) -> Tuple[int, List[ExtClass]]:
    """dim Ext^p(X, Y) with a cocycle basis."""
    space = ExtSpace(x, y, p, cap)
    return space.dim, space.classes()


def ext_dim(x: Module, y: Module, p: int, cap: int = 32) -> int:
    return ExtSpace(x, y, p, cap).dim


def ext_vanishing(x: Module, y: Module, degrees: Sequence[int], cap: int) -> Verdict:
    """
    Ext^p(X, Y) = 0 for the given degrees. Degrees beyond the projective
    dimension vanish unconditionally; otherwise degrees beyond the cap make
    the answer conditional.
    """
    res = min_resolution(x, cap)
    checked: List[int] = []
    limit = None
    for p in degrees:
        if res.terminated and p > (res.length or 0) and p > 0:
            continue
        if p - 1 >= len(res.covers) and not res.terminated:
            limit = cap
            continue
        d = ext_dim(x, y, p, cap)
        if d:
            return Verdict.false(f"Ext^{p}({x.name}, {y.name}) = {d}", {"degree": p, "dim": d,
                                                                       "source": x.name, "target": y.name})
        checked.append(p)
    return Verdict.true(f"Ext vanishes for {x.name}, {y.name}", {"degrees": checked}).with_cap(limit)


def positive_ext_vanishing(x: Module, y: Module, cap: int) -> Verdict:
    """Ext^p(X, Y) = 0 for all p > 0, certified when the resolution of X terminates within the cap."""
    res = min_resolution(x, cap)
    top = res.length if res.terminated else cap + 1
    verdict = ext_vanishing(x, y, range(1, (top or 0) + 1), cap)
    if verdict.is_true and not res.terminated:
        return verdict.with_cap(cap + 1)
    return verdict


@dataclass
class ExtTable:
    """
    dim Ext^p(X_i, Y_j) for p = 0..max_degree.

    Attributes:
        rows: source names
        columns: target names
        values: values[p][i][j], None where the cap prevented the computation
        certified: every resolution terminated within the cap
    """
    rows: List[str]
    columns: List[str]
    values: List[List[List[Optional[int]]]]
    certified: bool

    def to_dict(self) -> Dict[str, object]:
        return {"sources": self.rows, "targets": self.columns,
                "dimensions": self.values, "certified": self.certified}


def ext_table(xs: Sequence[Module], ys: Sequence[Module], max_degree: int, cap: int = 32,
              executor=None) -> ExtTable:
    """Ext dimensions for all pairs; ``executor`` (a concurrent.futures executor) parallelises over sources."""
    def row(x: Module) -> Tuple[List[List[Optional[int]]], bool]:
        res = min_resolution(x, cap)
        out = []
        for p in range(max_degree + 1):
            line = []
            for y in ys:
                try:
                    line.append(ext_dim(x, y, p, cap))
                except UndecidedError:
                    line.append(None)
            out.append(line)
        return out, res.terminated

    results = list(executor.map(row, xs)) if executor is not None else [row(x) for x in xs]
    values = [[results[i][0][p] for i in range(len(xs))] for p in range(max_degree + 1)]
    return ExtTable([x.name for x in xs], [y.name for y in ys], values, all(t for _, t in results))


def tor(x: Module, bim: Bimodule, p: int, cap: int = 32) -> int:
    """
    dim Tor_p(X, M) for a right B-module X and a B-A-bimodule M.

    Raises:
        UndecidedError: the resolution of X does not reach degree p within the cap
    """
    if x.algebra is not bim.left:
        raise IncompatibleAlgebraError("tor")
    if p == 0:
        return tensor_data(x, bim).module.dim
    res = min_resolution(x, max(cap, 0))
    if p - 1 >= len(res.covers):
        if res.terminated:
            return 0
        raise UndecidedError(f"Tor_{p}({x.name}, {bim.name}): resolution cap {cap} reached")
    omega, inc = res.syzygy(p)
    if omega.dim == 0:
        return 0
    src = tensor_data(omega, bim)
    tgt = tensor_data(inc.target, bim)
    f = tensor_map(inc, bim, src, tgt)
    value = src.module.dim - f.rank()
    logger.debug(f"Tor_{p}({x.name}, {bim.name}) = {value}")
    return value
