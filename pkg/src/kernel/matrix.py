"""
Dense exact matrices over a FieldSpec.

A thin immutable wrapper around sympy's dense ``DomainMatrix``. All
constructors go through ``DomainMatrix(rows, shape, domain)`` so every
instance keeps the dense format and can be combined with every other one.
Vectors are plain tuples of domain elements.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from src.utils.exceptions import DimensionMismatchError
from .field import FieldSpec

Vector = Tuple


class Matrix:
    """
    Immutable dense matrix.

    Args:
        rows: list of rows, each a list of domain elements (already coerced)
        shape: (rows, cols); required when there are no rows
        field: the ground field
    """

    __slots__ = ("_dm", "field")

    def __init__(self, rows: List[list], shape: Tuple[int, int], field: FieldSpec):
        self.field = field
        self._dm = DomainMatrix([list(r) for r in rows], shape, field.domain)

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], field: FieldSpec, cols: Optional[int] = None) -> "Matrix":
        data = [[field(x) for x in row] for row in rows]
        if cols is None:
            if not data:
                raise DimensionMismatchError("explicit column count", "no rows", "shape")
            cols = len(data[0])
        for row in data:
            if len(row) != cols:
                raise DimensionMismatchError(cols, len(row), "row length")
        return cls(data, (len(data), cols), field)

    @classmethod
    def _raw(cls, rows: List[list], shape: Tuple[int, int], field: FieldSpec) -> "Matrix":
        obj = cls.__new__(cls)
        obj.field = field
        obj._dm = DomainMatrix(rows, shape, field.domain)
        return obj

    @classmethod
    def _wrap(cls, dm: DomainMatrix, field: FieldSpec) -> "Matrix":
        obj = cls.__new__(cls)
        obj.field = field
        obj._dm = dm.to_dense()
        return obj

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec) -> "Matrix":
        z = field.zero
        return cls._raw([[z] * cols for _ in range(rows)], (rows, cols), field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "Matrix":
        z, o = field.zero, field.one
        return cls._raw([[o if i == j else z for j in range(n)] for i in range(n)], (n, n), field)

    @classmethod
    def from_row_vectors(cls, vectors: Sequence[Vector], cols: int, field: FieldSpec) -> "Matrix":
        return cls._raw([list(v) for v in vectors], (len(vectors), cols), field)

    @classmethod
    def from_column_vectors(cls, vectors: Sequence[Vector], rows: int, field: FieldSpec) -> "Matrix":
        return cls.from_row_vectors(vectors, rows, field).transpose()

    @classmethod
    def block_diagonal(cls, blocks: Sequence["Matrix"], field: FieldSpec) -> "Matrix":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        data = [[field.zero] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i, row in enumerate(b.to_lists()):
                data[r0 + i][c0:c0 + b.cols] = row
            r0 += b.rows
            c0 += b.cols
        return cls._raw(data, (rows, cols), field)

    # -- shape and access -------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self._dm.shape

    @property
    def rows(self) -> int:
        return self._dm.shape[0]

    @property
    def cols(self) -> int:
        return self._dm.shape[1]

    @property
    def domain_matrix(self) -> DomainMatrix:
        return self._dm

    @property
    def _data(self) -> List[list]:
        rep = self._dm.rep
        return rep if isinstance(rep, list) else rep.to_list()

    def to_lists(self) -> List[list]:
        return [list(r) for r in self._dm.rep.to_list()]

    def entry(self, i: int, j: int):
        return self._dm.rep.getitem(i, j)

    def row(self, i: int) -> Vector:
        return tuple(self._data[i])

    def row_vectors(self) -> List[Vector]:
        return [tuple(r) for r in self._data]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._data)

    def is_zero(self) -> bool:
        return all(not x for row in self._data for x in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- arithmetic -------------------------------------------------------

    def _check_field(self, other: "Matrix", op: str):
        if other.field != self.field:
            raise DimensionMismatchError(str(self.field), str(other.field), f"field in {op}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other, "@")
        if self.cols != other.rows:
            raise DimensionMismatchError(self.cols, other.rows, "inner dimension")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return Matrix.zeros(self.rows, other.cols, self.field)
        return Matrix._wrap(self._dm * other._dm, self.field)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other, "+")
        if self.shape != other.shape:
            raise DimensionMismatchError(self.shape, other.shape, "shape")
        if 0 in self.shape:
            return self
        return Matrix._wrap(self._dm + other._dm, self.field)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_field(other, "-")
        if self.shape != other.shape:
            raise DimensionMismatchError(self.shape, other.shape, "shape")
        if 0 in self.shape:
            return self
        return Matrix._wrap(self._dm - other._dm, self.field)

    def __neg__(self) -> "Matrix":
        return self.scale(-self.field.one)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix._raw([[c * x for x in row] for row in self._dm.rep.to_list()], self.shape, self.field)

    def __pow__(self, k: int) -> "Matrix":
        result = Matrix.identity(self.rows, self.field)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self._dm.rep.to_list() == other._dm.rep.to_list())

    __hash__ = None

    def transpose(self) -> "Matrix":
        data = self._dm.rep.to_list()
        return Matrix._raw([[data[i][j] for i in range(self.rows)] for j in range(self.cols)],
                           (self.cols, self.rows), self.field)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def hstack(self, *others: "Matrix") -> "Matrix":
        data = self.to_lists()
        cols = self.cols
        for o in others:
            if o.rows != self.rows:
                raise DimensionMismatchError(self.rows, o.rows, "row count in hstack")
            for i, row in enumerate(o._dm.rep.to_list()):
                data[i].extend(row)
            cols += o.cols
        return Matrix._raw(data, (self.rows, cols), self.field)

    def vstack(self, *others: "Matrix") -> "Matrix":
        data = self.to_lists()
        for o in others:
            if o.cols != self.cols:
                raise DimensionMismatchError(self.cols, o.cols, "column count in vstack")
            data.extend(list(r) for r in o._dm.rep.to_list())
        return Matrix._raw(data, (len(data), self.cols), self.field)

    def extract(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        data = self._dm.rep.to_list()
        return Matrix._raw([[data[i][j] for j in cols] for i in rows], (len(rows), len(cols)), self.field)

    def rows_at(self, rows: Sequence[int]) -> "Matrix":
        return self.extract(rows, range(self.cols))

    def cols_at(self, cols: Sequence[int]) -> "Matrix":
        return self.extract(range(self.rows), cols)

    def apply_row(self, v: Vector) -> Vector:
        """Row vector times matrix."""
        if len(v) != self.rows:
            raise DimensionMismatchError(self.rows, len(v), "vector length")
        z = self.field.zero
        data = self._data
        out = [z] * self.cols
        for i, x in enumerate(v):
            if not x:
                continue
            row = data[i]
            for j in range(self.cols):
                if row[j]:
                    out[j] += x * row[j]
        return tuple(out)

    # -- elimination ------------------------------------------------------

    def rref(self) -> Tuple["Matrix", Tuple[int, ...]]:
        """Reduced row echelon form and the pivot columns."""
        if 0 in self.shape:
            return self, ()
        reduced, pivots = self._dm.rref()
        return Matrix._wrap(reduced, self.field), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.rows

    def inverse(self) -> "Matrix":
        if self.rows == 0:
            return self
        return Matrix._wrap(self._dm.inv(), self.field)

    def kernel_basis(self) -> List[Vector]:
        """Basis of the right null space {v : self·v = 0}, one vector per free column."""
        return _null_space_from(self)

    def left_kernel(self) -> "Matrix":
        """Rows spanning {v : v·self = 0}."""
        vectors = _null_space_from(self.transpose())
        return Matrix.from_row_vectors(vectors, self.rows, self.field)

    def charpoly_factors(self) -> List[Tuple[list, int]]:
        """Irreducible factors of the characteristic polynomial (coefficients highest degree first)."""
        if self.rows == 0:
            return []
        return [(list(coeffs), mult) for coeffs, mult in self._dm.charpoly_factor_list()]

    def __repr__(self) -> str:
        body = "; ".join(" ".join(self.field.format(x) for x in row) for row in self._dm.rep.to_list())
        return f"Matrix<{self.rows}x{self.cols} over {self.field}>[{body}]"


def _null_space_from(m: Matrix) -> List[Vector]:
    K = m.field
    if m.cols == 0:
        return []
    if m.rows == 0:
        return [tuple(K.one if i == j else K.zero for i in range(m.cols)) for j in range(m.cols)]
    reduced, pivots = m.rref()
    data = reduced.to_lists()
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [K.zero] * m.cols
        v[free] = K.one
        for r, p in enumerate(pivots):
            v[p] = -data[r][free]
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class SolveResult:
    """
    Outcome of ``solve``: a solution or a certificate that none exists.

    Attributes:
        solution: a vector x with m·x = b, or None
        rank: rank of m
        augmented_rank: rank of (m | b); larger than ``rank`` iff unsolvable
    """
    solution: Optional[Vector]
    rank: int
    augmented_rank: int

    @property
    def consistent(self) -> bool:
        return self.solution is not None


def solve(m: Matrix, b: Sequence) -> SolveResult:
    """Solve m·x = b exactly."""
    if len(b) != m.rows:
        raise DimensionMismatchError(m.rows, len(b), "right-hand side length")
    K = m.field
    rhs = Matrix.from_column_vectors([tuple(K(x) for x in b)], m.rows, K)
    augmented = m.hstack(rhs)
    reduced, pivots = augmented.rref()
    rank = len([p for p in pivots if p < m.cols])
    if m.cols in pivots:
        return SolveResult(None, rank, rank + 1)
    x = [K.zero] * m.cols
    data = reduced.to_lists()
    for r, p in enumerate(pivots):
        x[p] = data[r][m.cols]
    return SolveResult(tuple(x), rank, rank)


def kernel_basis(m: Matrix) -> List[Vector]:
    return m.kernel_basis()


def rank(m: Matrix) -> int:
    return m.rank()


def solve_rows(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """A matrix X with X·a = b (row-wise solve), or None when some row of b is outside the row space of a."""
    K = a.field
    if b.rows == 0:
        return Matrix.zeros(0, a.rows, K)
    at = a.transpose()
    out = []
    for v in b.row_vectors():
        res = solve(at, v)
        if not res.consistent:
            return None
        out.append(res.solution)
    return Matrix.from_row_vectors(out, a.rows, K)


def sparse_kernel(equations: Sequence[dict], ncols: int, field: FieldSpec) -> List[Vector]:
    """
    Null space of a sparse system given as one {column: coefficient} dict per
    equation. Same basis convention as ``Matrix.kernel_basis``.
    """
    K = field
    dod = {}
    for eq in equations:
        row = {j: c for j, c in eq.items() if c}
        if row:
            dod[len(dod)] = row
    if ncols == 0:
        return []
    if not dod:
        return [tuple(K.one if i == j else K.zero for i in range(ncols)) for j in range(ncols)]
    reduced, pivots = DomainMatrix(dod, (len(dod), ncols), K.domain).rref()
    rows = reduced.to_dod()
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [K.zero] * ncols
        v[free] = K.one
        for r, p in enumerate(pivots):
            c = rows.get(r, {}).get(free)
            if c:
                v[p] = -c
        basis.append(tuple(v))
    return basis
