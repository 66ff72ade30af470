"""
Jacobson radical and the semisimple / division-ring predicates.
"""

import logging

from src.kernel import Matrix, Subspace, single_eigenvalue
from src.utils.exceptions import UndecidedError
from src.utils.verdict import Verdict
from .algebra import Algebra, Ideal, is_nilpotent, quotient_algebra

logger = logging.getLogger(__name__)


def trace_form_applies(a: Algebra) -> bool:
    p = a.field.characteristic
    return p == 0 or p > a.dim


def _trace_form_radical(a: Algebra) -> Subspace:
    K = a.field
    n = a.dim
    # t_l = trace of left multiplication by b_l
    traces = [sum((a.left[l].entry(k, k) for k in range(n)), K.zero) for l in range(n)]
    gram = []
    for j in range(n):
        row = []
        for k in range(n):
            prod = a.basis_product(j, k)
            row.append(sum((c * traces[l] for l, c in enumerate(prod) if c), K.zero))
        gram.append(row)
    kernel = Matrix._raw(gram, (n, n), K).kernel_basis()
    return Subspace.span(kernel, n, K)


def radical(a: Algebra) -> Ideal:
    """
    J(Λ). Uses the radical known from construction when available, else the
    trace form {x : tr(L_x L_y) = 0 for all y} in characteristic 0 or p > dim.

    Raises:
        UndecidedError: small positive characteristic without a known radical
    """
    def build() -> Ideal:
        if a.radical_hint is not None:
            return Ideal(a, Subspace.span(list(a.radical_hint), a.dim, a.field))
        if not trace_form_applies(a):
            logger.warning(f"Radical of '{a.name}' undetermined: characteristic {a.field.characteristic} <= dim {a.dim}")
            raise UndecidedError(f"radical of {a.name}: trace form needs characteristic 0 or p > {a.dim}")
        ideal = Ideal(a, _trace_form_radical(a))
        logger.debug(f"Trace-form radical of '{a.name}': dim {ideal.dim}")
        return ideal

    return a.cache("radical", build)


def is_semisimple(a: Algebra) -> Verdict:
    try:
        j = radical(a)
    except UndecidedError as e:
        return Verdict.undetermined(e.reason)
    return Verdict.of(j.dim == 0, "radical is zero" if j.dim == 0 else f"radical has dimension {j.dim}",
                      {"radical_dim": j.dim})


def check_radical(a: Algebra) -> bool:
    """J nilpotent and Λ/J semisimple, when the latter is decidable."""
    j = radical(a)
    if not is_nilpotent(j):
        return False
    top, _ = quotient_algebra(a, j)
    try:
        return radical(top).dim == 0
    except UndecidedError:
        return True


def _is_commutative(a: Algebra) -> bool:
    return all(a.basis_product(i, j) == a.basis_product(j, i) for i in range(a.dim) for j in range(i + 1, a.dim))


def is_division_ring(a: Algebra) -> Verdict:
    """
    Decide whether Λ is a division ring.

    false: several idempotents, or a nonzero zero divisor among the basis
    elements. true: dimension 1 (split), or over F_p a commutative algebra
    containing an element whose characteristic polynomial is irreducible of
    degree dim Λ. Non-commutative algebras over F_p are never division rings
    (finite division rings are fields). Everything else is undetermined.
    """
    K = a.field
    if a.dim == 0:
        return Verdict.false("zero algebra")
    if a.n_vertices > 1:
        return Verdict.false(f"{a.n_vertices} orthogonal idempotents", {"idempotents": a.n_vertices})
    for k in range(a.dim):
        if not a.left[k].is_invertible():
            return Verdict.false(f"{a.labels[k]} is a zero divisor", {"zero_divisor": a.labels[k]})
    if a.dim == 1:
        return Verdict.true("one-dimensional (split)", {"dim": 1})
    # every basis element invertible does not yet exclude zero divisors among combinations
    if K.characteristic == 0:
        try:
            if radical(a).dim:
                return Verdict.false("nonzero radical")
        except UndecidedError:
            pass
        return Verdict.undetermined(f"non-split algebra of dimension {a.dim} over Q")
    if not _is_commutative(a):
        return Verdict.false("non-commutative algebra over a finite field", {"dim": a.dim})
    probes = [a.unit_vector(k) for k in range(a.dim)]
    probes += [tuple(x + y for x, y in zip(probes[i], probes[j]))
               for i in range(a.dim) for j in range(i + 1, a.dim)]
    for theta in probes:
        m = a.left_matrix(theta)
        factors = m.charpoly_factors()
        if len(factors) > 1:
            return Verdict.false("a probe element splits the regular module", {"probe": a.format_element(theta)})
        coeffs, mult = factors[0]
        if mult == 1 and len(coeffs) - 1 == a.dim:
            return Verdict.true("regular module is irreducible", {"probe": a.format_element(theta)})
        if mult > 1 and single_eigenvalue(m) is not None and m != Matrix.identity(a.dim, K).scale(single_eigenvalue(m)):
            return Verdict.false("a probe element is not semisimple", {"probe": a.format_element(theta)})
    return Verdict.undetermined("no probe element generates the algebra")
