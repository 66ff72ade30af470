import random
from fractions import Fraction

import pytest

from src.kernel import (
    CoordinateSystem,
    FieldSpec,
    Matrix,
    Subspace,
    flatten,
    rank,
    solve,
    solve_rows,
    sparse_kernel,
)
from src.utils.exceptions import DimensionMismatchError

Q = FieldSpec.rationals()
F5 = FieldSpec.prime(5)


def _random_matrix(rng: random.Random, rows: int, cols: int, field: FieldSpec) -> Matrix:
    return Matrix.from_rows([[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)], field, cols)


def test_field_parse_and_format():
    assert FieldSpec.parse("Q") == Q
    assert FieldSpec.parse(" 5 ") == F5
    assert str(Q) == "Q" and str(F5) == "F5"
    assert F5.format(F5(7)) == "2"
    assert Q.format(Q(Fraction(2, 4))) == "1/2"
    assert len(F5.elements()) == 5


def test_field_rejects_non_primes():
    with pytest.raises(ValueError):
        FieldSpec.parse("6")
    with pytest.raises(ValueError):
        FieldSpec.parse("R")
    with pytest.raises(ValueError):
        Q.elements()


def test_fraction_with_denominator_divisible_by_p():
    with pytest.raises(ValueError):
        F5(Fraction(1, 5))
    assert F5(Fraction(1, 2)) * F5(2) == F5.one


def test_rank_nullity_and_rref():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]], Q)
    reduced, pivots = m.rref()
    assert pivots == (0, 1)
    assert rank(m) == 2
    kernel = m.kernel_basis()
    assert len(kernel) == 1
    assert all(not sum(m.entry(i, j) * kernel[0][j] for j in range(3)) for i in range(3))


def test_left_kernel_annihilates():
    m = Matrix.from_rows([[1, 1], [2, 2], [0, 1]], Q)
    left = m.left_kernel()
    assert left.rows == 1
    assert (left @ m).is_zero()


@pytest.mark.parametrize("seed", [0, 1, 2, 3, 4])
@pytest.mark.parametrize("field", [Q, F5], ids=["Q", "F5"])
def test_rank_plus_nullity(seed, field):
    rng = random.Random(seed)
    m = _random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5), field)
    assert m.rank() + len(m.kernel_basis()) == m.cols
    assert m.rank() + m.left_kernel().rows == m.rows


@pytest.mark.parametrize("seed", [10, 11, 12])
def test_solve_consistency(seed):
    rng = random.Random(seed)
    m = _random_matrix(rng, 4, 3, Q)
    x = tuple(Q(rng.randint(-2, 2)) for _ in range(3))
    b = tuple(sum(m.entry(i, j) * x[j] for j in range(3)) for i in range(4))
    result = solve(m, b)
    assert result.consistent
    assert tuple(sum(m.entry(i, j) * result.solution[j] for j in range(3)) for i in range(4)) == b


def test_solve_inconsistent_reports_ranks():
    m = Matrix.from_rows([[1, 0], [1, 0]], Q)
    result = solve(m, [1, 2])
    assert not result.consistent
    assert result.augmented_rank == result.rank + 1


def test_solve_rows():
    a = Matrix.from_rows([[1, 0, 1], [0, 1, 1]], Q)
    b = Matrix.from_rows([[2, 3, 5]], Q)
    x = solve_rows(a, b)
    assert x is not None and x @ a == b
    assert solve_rows(a, Matrix.from_rows([[0, 0, 1]], Q)) is None


def test_shape_mismatch_raises():
    a = Matrix.from_rows([[1, 2]], Q)
    with pytest.raises(DimensionMismatchError):
        a @ a
    with pytest.raises(DimensionMismatchError):
        Matrix.from_rows([[1, 2], [3]], Q)


def test_subspace_operations():
    u = Subspace.span([(Q(1), Q(0), Q(0)), (Q(0), Q(1), Q(0))], 3, Q)
    w = Subspace.span([(Q(0), Q(1), Q(0)), (Q(0), Q(0), Q(1))], 3, Q)
    assert u.dim == 2
    assert u.intersection(w).dim == 1
    assert (u + w).dim == 3
    assert u.contains((Q(3), Q(-1), Q(0)))
    assert not u.contains((Q(0), Q(0), Q(1)))
    assert u.complement_indices() == (2,)
    assert Subspace.zero(3, Q).dim == 0 and Subspace.whole(3, Q).dim == 3


def test_coordinate_system_round_trip():
    vectors = [(Q(1), Q(2), Q(0)), (Q(0), Q(1), Q(1))]
    cs = CoordinateSystem(vectors, 3, Q)
    v = (Q(2), Q(3), Q(-1))
    assert cs.coordinates(v) == (Q(2), Q(-1))
    assert cs.coordinates((Q(0), Q(0), Q(1))) is None
    with pytest.raises(DimensionMismatchError):
        CoordinateSystem(vectors + [(Q(1), Q(3), Q(1))], 3, Q)


def test_sparse_kernel_matches_dense():
    equations = [{0: Q(1), 2: Q(-1)}, {1: Q(2), 2: Q(-2)}]
    dense = Matrix.from_rows([[1, 0, -1], [0, 2, -2]], Q)
    assert sparse_kernel(equations, 3, Q) == dense.kernel_basis()
    assert len(sparse_kernel([], 2, F5)) == 2


def test_nilpotent_left_action_kernel(kalck):
    # left multiplication by the arrow c kills the paths that do not start at vertex 2
    c = kalck.index_of("c")
    left = kalck.left_matrix(kalck.unit_vector(c))
    assert len(left.kernel_basis()) + left.rank() == kalck.dim
    assert left.rank() == 2
    assert len(left.kernel_basis()) == 5
    assert (left @ left).is_zero()


def test_flatten_is_row_major():
    m = Matrix.from_rows([[1, 2], [3, 4]], F5)
    assert flatten(m) == tuple(F5(x) for x in (1, 2, 3, 4))
