"""
Right modules, module maps and short exact sequences.

A module over an algebra with vertices 1..m keeps a basis sorted by vertex:
the first dims[0] basis vectors span M e_1, the next dims[1] span M e_2, and
so on, so e_v acts as the coordinate projection onto its block. Maps are
matrices acting on row vectors; ``f.then(g)`` has matrix F·G.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from src.algebra import Algebra
from src.kernel import Matrix, Vector
from src.utils.exceptions import DimensionMismatchError, IncompatibleAlgebraError, ModuleFormatError

logger = logging.getLogger(__name__)


class Module:
    """
    Finite-dimensional right module.

    Args:
        algebra: the acting algebra
        dims: dim M e_v for every vertex v
        actions: one matrix per algebra basis element
        name: display name
    """

    def __init__(self, algebra: Algebra, dims: Sequence[int], actions: Sequence[Matrix], name: str = "M"):
        self.algebra = algebra
        self.dims: Tuple[int, ...] = tuple(dims)
        self.actions: Tuple[Matrix, ...] = tuple(actions)
        self.name = name
        self._cache: Dict[object, object] = {}
        self.basis_labels: Optional[Tuple[str, ...]] = None
        if len(self.dims) != algebra.n_vertices:
            raise DimensionMismatchError(algebra.n_vertices, len(self.dims), "dimension vector length")
        if len(self.actions) != algebra.dim:
            raise DimensionMismatchError(algebra.dim, len(self.actions), "action count")
        n = self.dim
        for m in self.actions:
            if m.shape != (n, n):
                raise DimensionMismatchError((n, n), m.shape, "action matrix shape")

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.dim == 0

    def offsets(self) -> List[int]:
        out, acc = [], 0
        for d in self.dims:
            out.append(acc)
            acc += d
        return out

    def block(self, v: int) -> range:
        start = self.offsets()[v]
        return range(start, start + self.dims[v])

    def vertex_of(self) -> List[int]:
        return [v for v, d in enumerate(self.dims) for _ in range(d)]

    def act(self, element: Sequence) -> Matrix:
        """Matrix of m -> m * x for an algebra element x."""
        result = Matrix.zeros(self.dim, self.dim, self.field)
        for k, c in enumerate(element):
            if c:
                result = result + self.actions[k].scale(c)
        return result

    def check(self) -> bool:
        """Action is a unital representation adapted to the vertex blocks."""
        a = self.algebra
        K = self.field
        for v, ev in enumerate(a.idempotents):
            expected = Matrix.zeros(self.dim, self.dim, K)
            rows = expected.to_lists()
            for i in self.block(v):
                rows[i][i] = K.one
            if self.actions[ev] != Matrix._raw(rows, (self.dim, self.dim), K):
                return False
        for i in range(a.dim):
            for j in range(a.dim):
                if self.actions[i] @ self.actions[j] != self.act(a.basis_product(i, j)):
                    logger.debug(f"{self.name}: action fails on ({a.labels[i]}, {a.labels[j]})")
                    return False
        return True

    def renamed(self, name: str) -> "Module":
        return Module(self.algebra, self.dims, self.actions, name)

    def cache(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def __repr__(self) -> str:
        return f"Module({self.name}, dims={list(self.dims)})"


class ModuleMap:
    """
    Homomorphism of right modules: a dim(source) x dim(target) matrix F with
    ρ_source(x)·F = F·ρ_target(x).
    """

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: Module, target: Module, matrix: Matrix):
        if source.algebra is not target.algebra:
            raise IncompatibleAlgebraError("ModuleMap")
        if matrix.shape != (source.dim, target.dim):
            raise DimensionMismatchError((source.dim, target.dim), matrix.shape, "map shape")
        self.source = source
        self.target = target
        self.matrix = matrix

    @classmethod
    def identity(cls, m: Module) -> "ModuleMap":
        return cls(m, m, Matrix.identity(m.dim, m.field))

    @classmethod
    def zero(cls, source: Module, target: Module) -> "ModuleMap":
        return cls(source, target, Matrix.zeros(source.dim, target.dim, source.field))

    def then(self, other: "ModuleMap") -> "ModuleMap":
        """Composite: first self, then other."""
        if other.source is not self.target and other.source.dim != self.target.dim:
            raise DimensionMismatchError(self.target.dim, other.source.dim, "composable maps")
        return ModuleMap(self.source, other.target, self.matrix @ other.matrix)

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.source, self.target, self.matrix + other.matrix)

    def scale(self, c) -> "ModuleMap":
        return ModuleMap(self.source, self.target, self.matrix.scale(c))

    def rank(self) -> int:
        return self.matrix.rank()

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def is_injective(self) -> bool:
        return self.rank() == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.dim

    def is_isomorphism(self) -> bool:
        return self.source.dim == self.target.dim and self.is_injective()

    def is_homomorphism(self) -> bool:
        F = self.matrix
        return all(rs @ F == F @ rt for rs, rt in zip(self.source.actions, self.target.actions))

    def apply(self, v: Sequence) -> Vector:
        return self.matrix.apply_row(tuple(v))

    def __repr__(self) -> str:
        return f"ModuleMap({self.source.name} -> {self.target.name}, rank={self.rank()})"


@dataclass(eq=False)
class SES:
    """0 -> A -> B -> C -> 0 given by its two maps."""
    left: ModuleMap
    right: ModuleMap

    @property
    def sub(self) -> Module:
        return self.left.source

    @property
    def middle(self) -> Module:
        return self.left.target

    @property
    def quotient(self) -> Module:
        return self.right.target

    def is_exact(self) -> bool:
        if not (self.left.is_injective() and self.right.is_surjective()):
            return False
        if not self.left.then(self.right).is_zero():
            return False
        return self.sub.dim + self.quotient.dim == self.middle.dim


@dataclass(eq=False)
class DirectSum:
    """A direct sum with its structure maps."""
    module: Module
    inclusions: Tuple[ModuleMap, ...]
    projections: Tuple[ModuleMap, ...]


def direct_sum(modules: Sequence[Module], name: Optional[str] = None) -> DirectSum:
    """
    ⊕ modules, basis re-sorted by vertex (summand order inside each vertex
    block).
    """
    if not modules:
        raise ModuleFormatError("direct sum of no modules; use zero_module")
    a = modules[0].algebra
    K = a.field
    for m in modules:
        if m.algebra is not a:
            raise IncompatibleAlgebraError("direct_sum")
    dims = [sum(m.dims[v] for m in modules) for v in range(a.n_vertices)]
    total = sum(dims)
    positions: List[List[int]] = [[0] * m.dim for m in modules]
    cursor = 0
    for v in range(a.n_vertices):
        for i, m in enumerate(modules):
            for local in m.block(v):
                positions[i][local] = cursor
                cursor += 1

    actions = []
    for k in range(a.dim):
        rows = [[K.zero] * total for _ in range(total)]
        for i, m in enumerate(modules):
            data = m.actions[k].to_lists()
            pos = positions[i]
            for r in range(m.dim):
                for c in range(m.dim):
                    if data[r][c]:
                        rows[pos[r]][pos[c]] = data[r][c]
        actions.append(Matrix._raw(rows, (total, total), K))
    label = name or " + ".join(m.name for m in modules)
    module = Module(a, dims, actions, label)

    inclusions, projections = [], []
    for i, m in enumerate(modules):
        inc = [[K.zero] * total for _ in range(m.dim)]
        for local, glob in enumerate(positions[i]):
            inc[local][glob] = K.one
        inc_matrix = Matrix._raw(inc, (m.dim, total), K)
        inclusions.append(ModuleMap(m, module, inc_matrix))
        projections.append(ModuleMap(module, m, inc_matrix.transpose()))
    return DirectSum(module, tuple(inclusions), tuple(projections))


def zero_module(a: Algebra, name: str = "0") -> Module:
    empty = Matrix.zeros(0, 0, a.field)
    return Module(a, [0] * a.n_vertices, [empty] * a.dim, name)


def power(m: Module, r: int, name: Optional[str] = None) -> DirectSum:
    """m^r (r >= 1)."""
    return direct_sum([m] * r, name or (f"{m.name}^{r}" if r != 1 else m.name))


def projective_indices(a: Algebra, v: int) -> List[int]:
    """Basis elements of e_v Λ, sorted by target vertex."""
    return sorted((k for k in range(a.dim) if a.source(k) == v), key=lambda k: (a.target(k), k))


def _build_projective(a: Algebra, v: int) -> Module:
    indices = projective_indices(a, v)
    dims = [sum(1 for k in indices if a.target(k) == w) for w in range(a.n_vertices)]
    actions = [a.right[j].extract(indices, indices) for j in range(a.dim)]
    module = Module(a, dims, actions, f"P{a.vertex_labels[v]}")
    module.basis_labels = tuple(a.labels[k] for k in indices)
    return module


def projective_module(a: Algebra, v: int) -> Module:
    """P_v = e_v Λ with the right regular action; basis sorted by target vertex."""
    return projective_modules(a)[v]


def projective_modules(a: Algebra) -> List[Module]:
    return a.cache("projectives", lambda: [_build_projective(a, v) for v in range(a.n_vertices)])


def regular_indices(a: Algebra) -> List[int]:
    return sorted(range(a.dim), key=lambda k: (a.target(k), k))


def regular_module(a: Algebra) -> Module:
    """Λ_Λ with basis sorted by target vertex."""
    def build() -> Module:
        indices = regular_indices(a)
        dims = [sum(1 for k in indices if a.target(k) == w) for w in range(a.n_vertices)]
        actions = [a.right[j].extract(indices, indices) for j in range(a.dim)]
        module = Module(a, dims, actions, "Λ")
        module.basis_labels = tuple(a.labels[k] for k in indices)
        return module
    return a.cache("regular", build)


def restriction_of_scalars(m: Module, along: Algebra, images: Matrix,
                           vertex_map: Sequence[Optional[int]], name: Optional[str] = None) -> Module:
    """
    Module over ``along`` obtained through an algebra map along -> m.algebra.

    Args:
        images: dim(along) x dim(m.algebra) matrix, row k = image of basis element k
        vertex_map: vertex of ``along`` -> vertex of m.algebra whose idempotent
            is the image of e_v (None when e_v maps to zero)
    """
    dims = [m.dims[w] if w is not None else 0 for w in vertex_map]
    if sum(dims) != m.dim:
        raise DimensionMismatchError(m.dim, sum(dims), "restricted dimension")
    actions = [m.act(images.row(k)) for k in range(along.dim)]
    return Module(along, dims, actions, name or m.name)
