"""
Path algebras modulo relations, built by degreewise elimination.
"""

import logging
from typing import Dict, List

from src.kernel import Matrix, complement_projection, invariant_closure
from src.utils.exceptions import AdmissibilityError
from .algebra import Algebra
from .presentation import Path, Presentation, load_presentation
from .structure import load_structure_constants

logger = logging.getLogger(__name__)


def _concat(p: Path, q: Path, bound: int):
    if p.target != q.source or p.length + q.length > bound:
        return None
    if not p.arrows:
        return q
    if not q.arrows:
        return p
    return Path(p.source, q.target, p.arrows + q.arrows)


def build_algebra(p: Presentation) -> Algebra:
    """
    kQ/I as an Algebra.

    Works in the truncation kQ/(paths longer than L): closes the relations
    to a two-sided ideal there, checks that every path of length L lies in
    it, and keeps as basis the path residues that are never pivots when
    longer paths are eliminated first.

    Raises:
        AdmissibilityError: a path of length L survives modulo the relations
    """
    K = p.field
    bound = p.length_bound
    paths = p.paths_up_to(bound)
    index: Dict[Path, int] = {q: i for i, q in enumerate(paths)}
    n = len(paths)
    logger.debug(f"Building '{p.name}': {n} paths up to length {bound}")

    def multiplication_matrix(arrow_path: Path, on_right: bool) -> Matrix:
        rows = []
        for q in paths:
            r = _concat(q, arrow_path, bound) if on_right else _concat(arrow_path, q, bound)
            row = [K.zero] * n
            if r is not None:
                row[index[r]] = K.one
            rows.append(row)
        return Matrix._raw(rows, (n, n), K)

    arrow_paths = [Path(a.source, a.target, (i,)) for i, a in enumerate(p.arrows)]
    actions = [multiplication_matrix(a, True) for a in arrow_paths] + \
              [multiplication_matrix(a, False) for a in arrow_paths]

    relation_vectors = []
    for rel in p.relations:
        v = [K.zero] * n
        for coeff, arrows in rel.terms:
            first, last = p.arrows[arrows[0]], p.arrows[arrows[-1]]
            v[index[Path(first.source, last.target, arrows)]] += K(coeff)
        relation_vectors.append(tuple(v))

    ideal = invariant_closure(relation_vectors, actions, n, K)

    for q in paths:
        if q.length == bound:
            unit = [K.zero] * n
            unit[index[q]] = K.one
            if not ideal.contains(unit):
                logger.error(f"Admissibility check failed for '{p.name}' at path {p.path_label(q)}")
                raise AdmissibilityError(p.path_label(q), bound)

    order = list(reversed(range(len(p.vertices), n))) + list(range(len(p.vertices)))
    kept, proj = complement_projection(ideal.basis, order)
    kept_paths = [paths[k] for k in kept]
    position = {k: i for i, k in enumerate(kept)}
    dim = len(kept)

    right = []
    for j, qj in enumerate(kept_paths):
        rows = []
        for qi in kept_paths:
            r = _concat(qi, qj, bound)
            rows.append(list(proj.row(index[r])) if r is not None else [K.zero] * dim)
        right.append(Matrix._raw(rows, (dim, dim), K))

    idempotents = [position[v] for v in range(len(p.vertices))]
    arrows = [position[index[a]] for a in arrow_paths]
    hint = [tuple(K.one if i == k else K.zero for i in range(dim)) for k in range(dim) if kept_paths[k].length > 0]
    algebra = Algebra(K,
                      [p.path_label(q) for q in kept_paths],
                      right,
                      [(q.source, q.target) for q in kept_paths],
                      idempotents,
                      p.vertices,
                      generators=arrows,
                      radical_hint=hint,
                      name=p.name)
    logger.info(f"Built algebra '{p.name}' over {K}: dimension {dim}")
    return algebra


def load_algebra(path: str) -> Algebra:
    """Load an ``.alg`` presentation or an ``.sc`` structure-constant file."""
    if str(path).endswith(".sc"):
        return load_structure_constants(path)
    return build_algebra(load_presentation(path))
