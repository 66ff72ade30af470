"""
Exact arithmetic kernel: fields, dense matrices and subspaces
"""

from .field import FieldSpec
from .matrix import Matrix, Vector, SolveResult, solve, solve_rows, kernel_basis, rank, sparse_kernel
from .subspace import (
    Subspace,
    CoordinateSystem,
    row_space,
    invariant_closure,
    solve_in_span,
    complement_projection,
    flatten,
)
from .spectral import single_eigenvalue, poly_at, fitting_power, minimal_polynomial_degree

__all__ = [
    "FieldSpec",
    "Matrix",
    "Vector",
    "SolveResult",
    "solve",
    "solve_rows",
    "kernel_basis",
    "rank",
    "sparse_kernel",
    "Subspace",
    "CoordinateSystem",
    "flatten",
    "row_space",
    "invariant_closure",
    "solve_in_span",
    "complement_projection",
    "single_eigenvalue",
    "poly_at",
    "fitting_power",
    "minimal_polynomial_degree",
]
