"""
Subspaces of K^n kept in reduced row echelon form.
"""

from typing import Iterable, List, Optional, Sequence, Tuple

from src.utils.exceptions import DimensionMismatchError
from .field import FieldSpec
from .matrix import Matrix, Vector, solve


class Subspace:
    """
    Row space of a matrix, stored as its RREF basis.

    Coordinates of a member v on the basis are read off at the pivot
    columns: v = sum_i v[pivot_i] * basis_i.
    """

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, generators: Matrix):
        self.field = generators.field
        self.ambient = generators.cols
        reduced, pivots = generators.rref()
        self.pivots: Tuple[int, ...] = pivots
        self.basis: Matrix = reduced.rows_at(range(len(pivots)))

    @classmethod
    def span(cls, vectors: Sequence[Vector], ambient: int, field: FieldSpec) -> "Subspace":
        return cls(Matrix.from_row_vectors(list(vectors), ambient, field))

    @classmethod
    def zero(cls, ambient: int, field: FieldSpec) -> "Subspace":
        return cls(Matrix.zeros(0, ambient, field))

    @classmethod
    def whole(cls, ambient: int, field: FieldSpec) -> "Subspace":
        return cls(Matrix.identity(ambient, field))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def vectors(self) -> List[Vector]:
        return self.basis.row_vectors()

    def coordinates(self, v: Sequence) -> Tuple:
        """Coordinates of a member; use ``contains`` first for arbitrary vectors."""
        return tuple(v[p] for p in self.pivots)

    def reduce(self, v: Sequence) -> Vector:
        """v minus its projection along the pivot columns; zero iff v is a member."""
        out = list(v)
        for r, p in enumerate(self.pivots):
            c = out[p]
            if c:
                row = self.basis.row(r)
                for j in range(self.ambient):
                    if row[j]:
                        out[j] -= c * row[j]
        return tuple(out)

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient:
            raise DimensionMismatchError(self.ambient, len(v), "vector length")
        return all(not x for x in self.reduce(v))

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.vectors())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.pivots == other.pivots and self.basis == other.basis

    __hash__ = None

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.basis.vstack(other.basis))

    def intersection(self, other: "Subspace") -> "Subspace":
        # x A = y B  <=>  (x, -y) in left kernel of [A; B]
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient, self.field)
        stacked = self.basis.vstack(other.basis)
        relations = stacked.left_kernel()
        coeffs = relations.cols_at(range(self.dim))
        return Subspace(coeffs @ self.basis)

    def complement_indices(self) -> Tuple[int, ...]:
        """Standard basis vectors not at pivots: they span a complement."""
        pivot_set = set(self.pivots)
        return tuple(j for j in range(self.ambient) if j not in pivot_set)

    def image(self, m: Matrix) -> "Subspace":
        """Image of the subspace under right multiplication by m."""
        return Subspace(self.basis @ m)

    def is_invariant(self, m: Matrix) -> bool:
        return all(self.contains(v) for v in (self.basis @ m).row_vectors())

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def row_space(m: Matrix) -> Subspace:
    return Subspace(m)


def invariant_closure(vectors: Iterable[Vector], actions: Sequence[Matrix], ambient: int,
                      field: FieldSpec) -> Subspace:
    """
    Smallest subspace containing ``vectors`` and stable under right
    multiplication by every matrix in ``actions``.
    """
    space = Subspace.span(list(vectors), ambient, field)
    while True:
        current = space.vectors()
        grown = [a.apply_row(v) for v in current for a in actions]
        new = Subspace.span(current + grown, ambient, field)
        if new.dim == space.dim:
            return space
        space = new


def solve_in_span(basis: Matrix, v: Sequence) -> Optional[Vector]:
    """Coefficients c with c·basis = v, or None."""
    res = solve(basis.transpose(), v)
    return res.solution


def complement_projection(generators: Matrix, order: Optional[Sequence[int]] = None
                          ) -> Tuple[Tuple[int, ...], Matrix]:
    """
    Quotient coordinates for V / rowspace(generators).

    Columns are eliminated in ``order`` so pivots land on the earliest
    columns of that order; the standard basis vectors that are never pivots
    are kept as the quotient basis (returned sorted). The projection matrix
    has one row per original basis vector, giving its class in the kept
    coordinates.
    """
    field = generators.field
    n = generators.cols
    order = list(order) if order is not None else list(range(n))
    position = {orig: pos for pos, orig in enumerate(order)}
    space = Subspace(generators.cols_at(order))
    kept = tuple(sorted(order[p] for p in space.complement_indices()))
    rows = []
    for k in range(n):
        unit = [field.zero] * n
        unit[position[k]] = field.one
        reduced = space.reduce(unit)
        rows.append(tuple(reduced[position[q]] for q in kept))
    return kept, Matrix.from_row_vectors(rows, len(kept), field)


class CoordinateSystem:
    """
    Coordinates with respect to a list of linearly independent vectors,
    read off at pivot columns through one precomputed inverse.
    """

    def __init__(self, vectors: Sequence[Vector], ambient: int, field: FieldSpec):
        self.field = field
        self.ambient = ambient
        self.basis = Matrix.from_row_vectors(list(vectors), ambient, field)
        self.pivots = Subspace(self.basis).pivots if vectors else ()
        if len(self.pivots) != len(vectors):
            raise DimensionMismatchError(len(vectors), len(self.pivots), "independent vectors")
        self._solver = self.basis.cols_at(self.pivots).inverse() if vectors else None

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def coordinates(self, v: Sequence) -> Optional[Vector]:
        """c with c·basis = v, or None when v is outside the span."""
        if self._solver is None:
            return () if all(not x for x in v) else None
        coeffs = self._solver.apply_row(tuple(v[p] for p in self.pivots))
        if self.basis.apply_row(coeffs) != tuple(v):
            return None
        return coeffs


def flatten(m: Matrix) -> Vector:
    """Row-major entries of a matrix as one vector."""
    return tuple(x for row in m.row_vectors() for x in row)
