"""
Characteristic-polynomial helpers used for Fitting decompositions and
division-ring probes.
"""

from typing import List, Optional, Sequence, Tuple

from .matrix import Matrix


def eigen_factors(m: Matrix) -> List[Tuple[list, int]]:
    return m.charpoly_factors()


def single_eigenvalue(m: Matrix):
    """lambda when charpoly(m) = (x - lambda)^n, else None."""
    factors = m.charpoly_factors()
    if len(factors) != 1:
        return None
    coeffs, _ = factors[0]
    if len(coeffs) != 2:
        return None
    return -coeffs[1] / coeffs[0]


def poly_at(coeffs: Sequence, m: Matrix) -> Matrix:
    """Horner evaluation, coefficients highest degree first."""
    K = m.field
    result = Matrix.zeros(m.rows, m.cols, K)
    ident = Matrix.identity(m.rows, K)
    for c in coeffs:
        result = result @ m + ident.scale(c)
    return result


def fitting_power(m: Matrix) -> Optional[Matrix]:
    """
    g(m)^n for the first irreducible factor g of the characteristic
    polynomial, n = size. Its kernel and image split the space into two
    nonzero invariant pieces. None when the characteristic polynomial is a
    power of a single irreducible.
    """
    factors = m.charpoly_factors()
    if len(factors) < 2:
        return None
    g, _ = factors[0]
    return poly_at(g, m) ** m.rows


def minimal_polynomial_degree(m: Matrix) -> int:
    """Degree of the minimal polynomial: first k with I, m, ..., m^k dependent."""
    K = m.field
    n = m.rows
    powers = [Matrix.identity(n, K)]
    flat = [tuple(x for row in powers[0].to_lists() for x in row)]
    while True:
        nxt = powers[-1] @ m
        candidate = flat + [tuple(x for row in nxt.to_lists() for x in row)]
        if Matrix.from_row_vectors(candidate, n * n, K).rank() < len(candidate):
            return len(powers)
        powers.append(nxt)
        flat = candidate
