"""
Finite-dimensional algebras given by structure constants.

Conventions:
    - elements are row vectors in the basis;
    - ``right[j]`` is the matrix of right multiplication by basis element j,
      so row i of ``right[j]`` is the product b_i * b_j;
    - the basis is homogeneous: basis element k lies in e_s Λ e_t with
      (s, t) = ``blocks[k]``;
    - every primitive idempotent e_v is itself a basis element
      (``idempotents[v]`` is its index).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from src.kernel import FieldSpec, Matrix, Subspace, Vector, complement_projection, invariant_closure
from src.utils.exceptions import AlgebraError, DimensionMismatchError

logger = logging.getLogger(__name__)


class Algebra:
    """
    Associative unital algebra with a complete set of orthogonal primitive
    idempotents.

    Args:
        field: ground field
        labels: one label per basis element
        right: right multiplication matrices, one per basis element
        blocks: (source vertex, target vertex) of every basis element
        idempotents: basis index of e_v for each vertex v
        vertex_labels: printable vertex names
        generators: basis indices generating the radical as an algebra with
            the idempotents (arrows); defaults to all non-idempotent elements
        radical_hint: vectors known to span the Jacobson radical, if any
        name: display name
    """

    def __init__(self,
                 field: FieldSpec,
                 labels: Sequence[str],
                 right: Sequence[Matrix],
                 blocks: Sequence[Tuple[int, int]],
                 idempotents: Sequence[int],
                 vertex_labels: Optional[Sequence[str]] = None,
                 generators: Optional[Sequence[int]] = None,
                 radical_hint: Optional[Sequence[Vector]] = None,
                 name: str = "algebra"):
        self.field = field
        self.labels: Tuple[str, ...] = tuple(labels)
        self.right: Tuple[Matrix, ...] = tuple(right)
        self.blocks: Tuple[Tuple[int, int], ...] = tuple(blocks)
        self.idempotents: Tuple[int, ...] = tuple(idempotents)
        self.vertex_labels: Tuple[str, ...] = tuple(vertex_labels or (str(v + 1) for v in range(len(idempotents))))
        idem = set(self.idempotents)
        self.generators: Tuple[int, ...] = tuple(generators if generators is not None
                                                 else (k for k in range(self.dim) if k not in idem))
        self.radical_hint: Optional[Tuple[Vector, ...]] = None if radical_hint is None else tuple(radical_hint)
        self.name = name
        self._left: Optional[Tuple[Matrix, ...]] = None
        self._cache: Dict[str, object] = {}

        n = len(self.labels)
        if len(self.right) != n or len(self.blocks) != n:
            raise DimensionMismatchError(n, (len(self.right), len(self.blocks)), "structure constant count")
        for m in self.right:
            if m.shape != (n, n):
                raise DimensionMismatchError((n, n), m.shape, "structure matrix shape")

    # -- basic data -------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def n_vertices(self) -> int:
        return len(self.idempotents)

    def __repr__(self) -> str:
        return f"Algebra({self.name!r}, dim={self.dim}, vertices={self.n_vertices}, field={self.field})"

    def source(self, k: int) -> int:
        return self.blocks[k][0]

    def target(self, k: int) -> int:
        return self.blocks[k][1]

    def block_indices(self, s: int, t: int) -> List[int]:
        return [k for k, b in enumerate(self.blocks) if b == (s, t)]

    def unit_vector(self, k: int) -> Vector:
        K = self.field
        return tuple(K.one if i == k else K.zero for i in range(self.dim))

    def zero_vector(self) -> Vector:
        return tuple(self.field.zero for _ in range(self.dim))

    def one(self) -> Vector:
        K = self.field
        idem = set(self.idempotents)
        return tuple(K.one if i in idem else K.zero for i in range(self.dim))

    def idempotent_vector(self, vertices: Sequence[int]) -> Vector:
        K = self.field
        chosen = {self.idempotents[v] for v in vertices}
        return tuple(K.one if i in chosen else K.zero for i in range(self.dim))

    def vertex_by_label(self, label: str) -> int:
        try:
            return self.vertex_labels.index(label)
        except ValueError:
            raise AlgebraError(f"algebra '{self.name}' has no vertex '{label}'")

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise AlgebraError(f"algebra '{self.name}' has no basis element '{label}'")

    # -- multiplication ---------------------------------------------------

    def basis_product(self, i: int, j: int) -> Vector:
        return self.right[j].row(i)

    def right_matrix(self, v: Sequence) -> Matrix:
        """Matrix of x -> x * v."""
        result = Matrix.zeros(self.dim, self.dim, self.field)
        for j, c in enumerate(v):
            if c:
                result = result + self.right[j].scale(c)
        return result

    @property
    def left(self) -> Tuple[Matrix, ...]:
        """Matrices of x -> b_i * x, one per basis element."""
        if self._left is None:
            rows = [m.to_lists() for m in self.right]
            self._left = tuple(
                Matrix._raw([list(rows[k][i]) for k in range(self.dim)], (self.dim, self.dim), self.field)
                for i in range(self.dim))
        return self._left

    def left_matrix(self, u: Sequence) -> Matrix:
        """Matrix of x -> u * x."""
        result = Matrix.zeros(self.dim, self.dim, self.field)
        for i, c in enumerate(u):
            if c:
                result = result + self.left[i].scale(c)
        return result

    def multiply(self, u: Sequence, v: Sequence) -> Vector:
        return self.right_matrix(v).apply_row(tuple(u))

    def format_element(self, v: Sequence) -> str:
        K = self.field
        parts = []
        for k, c in enumerate(v):
            if not c:
                continue
            if c == K.one:
                parts.append(self.labels[k])
            else:
                parts.append(f"{K.format(c)}*{self.labels[k]}")
        return " + ".join(parts) if parts else "0"

    # -- sanity checks ----------------------------------------------------

    def check_associative(self) -> bool:
        """(b_i b_j) b_k = b_i (b_j b_k) on all triples: R_j R_k = R_{b_j b_k}."""
        for j in range(self.dim):
            for k in range(self.dim):
                if self.right[j] @ self.right[k] != self.right_matrix(self.basis_product(j, k)):
                    logger.debug(f"associativity fails at ({self.labels[j]}, {self.labels[k]})")
                    return False
        return True

    def check_idempotents(self) -> bool:
        """Orthogonality, e_v e_w = delta e_v, sum equal to the unit, block consistency."""
        K = self.field
        for v, ev in enumerate(self.idempotents):
            for w, ew in enumerate(self.idempotents):
                expected = self.unit_vector(ev) if v == w else self.zero_vector()
                if self.basis_product(ev, ew) != expected:
                    return False
        one = self.right_matrix(self.one())
        if one != Matrix.identity(self.dim, K) or self.left_matrix(self.one()) != Matrix.identity(self.dim, K):
            return False
        for k, (s, t) in enumerate(self.blocks):
            bk = self.unit_vector(k)
            if self.basis_product(self.idempotents[s], k) != bk or self.basis_product(k, self.idempotents[t]) != bk:
                return False
        return True

    def cache(self, key: str, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]


class Ideal:
    """
    Two-sided ideal of an algebra, stored as a subspace.

    Attributes:
        algebra: parent algebra
        space: Subspace of the algebra spanned by the ideal
    """

    def __init__(self, algebra: Algebra, space: Subspace):
        self.algebra = algebra
        self.space = space

    @property
    def dim(self) -> int:
        return self.space.dim

    def vectors(self) -> List[Vector]:
        return self.space.vectors()

    def contains(self, v: Sequence) -> bool:
        return self.space.contains(v)

    def is_two_sided(self) -> bool:
        a = self.algebra
        return all(self.space.is_invariant(m) for m in a.right + a.left)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.algebra is other.algebra and self.space == other.space

    __hash__ = None

    def __repr__(self) -> str:
        return f"Ideal(dim={self.dim} in {self.algebra.name})"


@dataclass
class QuotientMap:
    """
    Projection Λ -> Λ/I.

    Attributes:
        kept: basis indices of Λ surviving as the quotient basis
        matrix: dim Λ x dim(Λ/I) matrix of the projection
        vertex_map: vertex of Λ -> vertex of Λ/I, None when e_v lies in I
    """
    kept: Tuple[int, ...]
    matrix: Matrix
    vertex_map: Tuple[Optional[int], ...]

    def apply(self, v: Sequence) -> Vector:
        return self.matrix.apply_row(tuple(v))


def two_sided_ideal(a: Algebra, gens: Sequence[Sequence]) -> Ideal:
    """Smallest two-sided ideal containing ``gens``."""
    actions = list(a.right) + list(a.left)
    space = invariant_closure([tuple(g) for g in gens], actions, a.dim, a.field)
    return Ideal(a, space)


def idempotent_ideal(a: Algebra, vertices: Sequence[int]) -> Ideal:
    """ΛeΛ for e the sum of the idempotents of ``vertices``."""
    return two_sided_ideal(a, [a.unit_vector(a.idempotents[v]) for v in vertices])


def zero_ideal(a: Algebra) -> Ideal:
    return Ideal(a, Subspace.zero(a.dim, a.field))


def ideal_product(i: Ideal, j: Ideal) -> Ideal:
    """Span of all products x*y (an ideal when both factors are)."""
    a = i.algebra
    products = [a.multiply(x, y) for x in i.vectors() for y in j.vectors()]
    return Ideal(a, Subspace.span(products, a.dim, a.field))


def ideal_power(i: Ideal, k: int) -> Ideal:
    a = i.algebra
    result = Ideal(a, Subspace.whole(a.dim, a.field))
    for _ in range(k):
        result = ideal_product(result, i)
    return result


def is_nilpotent(i: Ideal) -> bool:
    return ideal_power(i, max(i.algebra.dim, 1)).dim == 0


def elimination_order(a: Algebra) -> List[int]:
    """Column order for quotients: later (longer) basis elements first, idempotents last."""
    idem = set(a.idempotents)
    return [k for k in reversed(range(a.dim)) if k not in idem] + [k for k in a.idempotents]


def quotient_algebra(a: Algebra, ideal: Ideal, name: Optional[str] = None) -> Tuple[Algebra, QuotientMap]:
    """
    Λ/I with its projection. Idempotents in I are dropped from the vertex
    list; the surviving basis keeps the original order and labels.
    """
    K = a.field
    generators = Matrix.from_row_vectors(ideal.vectors(), a.dim, K)
    kept, proj = complement_projection(generators, elimination_order(a))
    position = {k: i for i, k in enumerate(kept)}

    vertex_map: List[Optional[int]] = []
    idempotents: List[int] = []
    vertex_labels: List[str] = []
    for v, ev in enumerate(a.idempotents):
        if ev in position:
            vertex_map.append(len(idempotents))
            idempotents.append(position[ev])
            vertex_labels.append(a.vertex_labels[v])
        else:
            vertex_map.append(None)

    n = len(kept)
    right = []
    for j in kept:
        # rows: (b_i * b_j) projected, for kept i
        right.append(a.right[j].rows_at(kept) @ proj)
    blocks = []
    for k in kept:
        s, t = a.blocks[k]
        if vertex_map[s] is None or vertex_map[t] is None:
            raise AlgebraError("quotient basis element outside the surviving idempotent blocks")
        blocks.append((vertex_map[s], vertex_map[t]))
    hint = None
    if a.radical_hint is not None:
        hint = Subspace(Matrix.from_row_vectors(list(a.radical_hint), a.dim, K) @ proj).vectors()
    quotient = Algebra(K, [a.labels[k] for k in kept], right, blocks, idempotents, vertex_labels,
                       radical_hint=hint,
                       name=name or f"{a.name}/I{ideal.dim}")
    logger.debug(f"Quotient {a.name} / ideal of dim {ideal.dim}: dim {n}")
    return quotient, QuotientMap(kept, proj, tuple(vertex_map))


def corner_algebra(a: Algebra, vertices: Sequence[int], name: Optional[str] = None) -> Tuple[Algebra, Tuple[int, ...]]:
    """
    eΛe for e the sum of the idempotents of ``vertices``, with the basis
    indices of Λ it consists of.
    """
    chosen = sorted(set(vertices))
    vmap = {v: i for i, v in enumerate(chosen)}
    indices = tuple(k for k, (s, t) in enumerate(a.blocks) if s in vmap and t in vmap)
    pos = {k: i for i, k in enumerate(indices)}
    right = [a.right[j].extract(indices, indices) for j in indices]
    blocks = [(vmap[a.blocks[k][0]], vmap[a.blocks[k][1]]) for k in indices]
    idempotents = [pos[a.idempotents[v]] for v in chosen]
    hint = None
    if a.radical_hint is not None:
        # J(eΛe) = eJe; on a homogeneous basis e x e is the restriction of x
        hint = Subspace.span([tuple(v[k] for k in indices) for v in a.radical_hint], len(indices), a.field).vectors()
    corner = Algebra(a.field, [a.labels[k] for k in indices], right, blocks, idempotents,
                     [a.vertex_labels[v] for v in chosen], radical_hint=hint,
                     name=name or f"e{a.name}e")
    return corner, indices


def cartan_matrix(a: Algebra) -> List[List[int]]:
    """C[s][t] = dim e_s Λ e_t."""
    n = a.n_vertices
    table = [[0] * n for _ in range(n)]
    for s, t in a.blocks:
        table[s][t] += 1
    return table


def opposite_algebra(a: Algebra) -> Algebra:
    """Λ^op: b_i ∘ b_j = b_j b_i, so right multiplication in Λ^op is left multiplication in Λ."""
    blocks = [(t, s) for s, t in a.blocks]
    hint = a.radical_hint
    return Algebra(a.field, a.labels, a.left, blocks, a.idempotents, a.vertex_labels,
                   generators=a.generators, radical_hint=hint, name=f"{a.name}^op")


def zero_algebra(field: FieldSpec, name: str = "0") -> Algebra:
    return Algebra(field, [], [], [], [], [], radical_hint=[], name=name)


@lru_cache(maxsize=None)
def ground_algebra(field: FieldSpec) -> Algebra:
    """The field itself as a one-vertex algebra; left modules are bimodules over it."""
    return Algebra(field, ["1"], [Matrix.identity(1, field)], [(0, 0)], [0], ["k"], radical_hint=[], name=str(field))
