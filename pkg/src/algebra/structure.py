"""
Algebras from raw structure constants (``.sc`` files).

    # dual numbers k[x]/(x^2)
    name dual
    field Q
    dimension 2
    labels 1 x
    idempotents 1
    product 1 1 = 1 0
    product 1 2 = 0 1
    product 2 1 = 0 1

Basis indices are 1-based; products not listed are zero. The idempotents
are basis elements and are verified, not assumed: orthogonal, summing to
the unit, and the multiplication must be associative. A basis that is not
homogeneous with respect to the idempotents is replaced by one that is.
"""

import logging
from fractions import Fraction
from pathlib import Path as FilePath
from typing import Dict, List, Optional, Sequence, Tuple

from src.kernel import FieldSpec, Matrix, Subspace, Vector
from src.utils.exceptions import AlgebraError, PresentationSyntaxError
from .algebra import Algebra

logger = logging.getLogger(__name__)


def _multiply(right: Sequence[Matrix], u: Vector, v: Vector, field: FieldSpec) -> Vector:
    n = len(u)
    result = [field.zero] * n
    for j, c in enumerate(v):
        if c:
            row = right[j].apply_row(u)
            for k in range(n):
                result[k] += c * row[k]
    return tuple(result)


def algebra_from_products(field: FieldSpec,
                          right: Sequence[Matrix],
                          idempotents: Sequence[int],
                          labels: Optional[Sequence[str]] = None,
                          name: str = "algebra") -> Algebra:
    """
    Build an Algebra from right multiplication matrices and idempotent basis
    indices, re-basing to a homogeneous basis when needed.

    Raises:
        AlgebraError: idempotents not orthogonal / not summing to 1, or
            multiplication not associative
    """
    n = len(right)
    labels = list(labels) if labels else [f"b{k + 1}" for k in range(n)]
    unit = lambda k: tuple(field.one if i == k else field.zero for i in range(n))
    idem_vecs = [unit(k) for k in idempotents]

    def mul(u, v):
        return _multiply(right, u, v, field)

    for a, ea in enumerate(idem_vecs):
        for b, eb in enumerate(idem_vecs):
            expected = ea if a == b else tuple(field.zero for _ in range(n))
            if mul(ea, eb) != expected:
                raise AlgebraError(f"idempotents {labels[idempotents[a]]}, {labels[idempotents[b]]} are not orthogonal idempotents")
    one = tuple(sum((v[i] for v in idem_vecs), field.zero) for i in range(n))
    for k in range(n):
        if mul(one, unit(k)) != unit(k) or mul(unit(k), one) != unit(k):
            raise AlgebraError("the idempotents do not sum to the unit")

    # homogeneous basis: pieces e_s b e_t
    m = len(idempotents)
    pieces: Dict[Tuple[int, int], Subspace] = {}
    for s in range(m):
        for t in range(m):
            vecs = [mul(mul(idem_vecs[s], unit(k)), idem_vecs[t]) for k in range(n)]
            pieces[(s, t)] = Subspace.span(vecs, n, field)

    homogeneous = all(any(pieces[(s, t)].contains(unit(k)) for s in range(m) for t in range(m))
                      for k in range(n))
    if homogeneous:
        blocks = []
        for k in range(n):
            blocks.append(next((s, t) for s in range(m) for t in range(m) if pieces[(s, t)].contains(unit(k))))
        algebra = Algebra(field, labels, right, blocks, idempotents, name=name)
    else:
        logger.info(f"Structure constants of '{name}' are not homogeneous; re-basing along the idempotents")
        new_basis: List[Vector] = []
        new_labels: List[str] = []
        blocks = []
        new_idempotents = [0] * m
        for s in range(m):
            for t in range(m):
                chosen: List[Vector] = []
                if s == t:
                    chosen.append(idem_vecs[s])
                for v in pieces[(s, t)].vectors():
                    if not Subspace.span(chosen + [v], n, field).dim == len(chosen):
                        chosen.append(v)
                for v in chosen:
                    if s == t and v == idem_vecs[s]:
                        new_idempotents[s] = len(new_basis)
                    new_basis.append(v)
                    blocks.append((s, t))
                    match = [k for k in range(n) if v == unit(k)]
                    new_labels.append(labels[match[0]] if match else
                                      "(" + " + ".join(f"{field.format(c)}*{labels[k]}" for k, c in enumerate(v) if c) + ")")
        change = Matrix.from_row_vectors(new_basis, n, field)
        inverse = change.inverse()
        new_right = []
        for j, bj in enumerate(new_basis):
            rows = [mul(bi, bj) for bi in new_basis]
            new_right.append(Matrix.from_row_vectors(rows, n, field) @ inverse)
        algebra = Algebra(field, new_labels, new_right, blocks, new_idempotents, name=name)

    if not algebra.check_associative():
        raise AlgebraError(f"multiplication of '{name}' is not associative")
    if not algebra.check_idempotents():
        raise AlgebraError(f"idempotents of '{name}' are inconsistent with the basis blocks")
    return algebra


def parse_structure_constants(text: str, source: Optional[str] = None) -> Algebra:
    """Parse the ``.sc`` format into a verified Algebra."""
    field = FieldSpec.rationals()
    dimension: Optional[int] = None
    labels: Optional[List[str]] = None
    idempotents: Optional[List[int]] = None
    products: List[Tuple[int, int, int, List[str]]] = []
    name = FilePath(source).stem if source else "algebra"

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        args = rest.split()
        try:
            if keyword == "field":
                field = FieldSpec.parse(rest)
            elif keyword == "name":
                name = rest.strip()
            elif keyword == "dimension":
                dimension = int(rest)
            elif keyword == "labels":
                labels = args
            elif keyword == "idempotents":
                idempotents = [int(x) - 1 for x in args]
            elif keyword == "product":
                lhs, sep, rhs = rest.partition("=")
                pair = lhs.split()
                if not sep or len(pair) != 2:
                    raise ValueError("expected 'product <i> <j> = <vector>'")
                products.append((lineno, int(pair[0]) - 1, int(pair[1]) - 1, rhs.split()))
            else:
                raise ValueError(f"unknown keyword '{keyword}'")
        except ValueError as e:
            raise PresentationSyntaxError(lineno, 1, str(e), source)

    if dimension is None or idempotents is None:
        raise PresentationSyntaxError(1, 1, "'dimension' and 'idempotents' lines are required", source)
    if labels is not None and len(labels) != dimension:
        raise PresentationSyntaxError(1, 1, f"expected {dimension} labels, got {len(labels)}", source)

    table = [[[field.zero] * dimension for _ in range(dimension)] for _ in range(dimension)]
    for lineno, i, j, coords in products:
        if not (0 <= i < dimension and 0 <= j < dimension):
            raise PresentationSyntaxError(lineno, 1, "basis index out of range", source)
        if len(coords) != dimension:
            raise PresentationSyntaxError(lineno, 1, f"product vector needs {dimension} entries", source)
        try:
            table[j][i] = [field(Fraction(c)) for c in coords]
        except ValueError as e:
            raise PresentationSyntaxError(lineno, 1, str(e), source)
    for k in idempotents:
        if not 0 <= k < dimension:
            raise PresentationSyntaxError(1, 1, f"idempotent index {k + 1} out of range", source)

    right = [Matrix._raw(table[j], (dimension, dimension), field) for j in range(dimension)]
    algebra = algebra_from_products(field, right, idempotents, labels, name)
    logger.info(f"Loaded structure constants '{name}' over {field}: dimension {algebra.dim}")
    return algebra


def load_structure_constants(path: str) -> Algebra:
    return parse_structure_constants(FilePath(path).read_text(), source=str(path))
