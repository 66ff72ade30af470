"""
Krull-Schmidt decomposition by Fitting splitting and isomorphism tests
between indecomposables.

Endomorphisms are probed in a fixed order (the Hom basis, then pairwise
products, then pairwise sums). An endomorphism whose characteristic
polynomial has two coprime factors splits the module by Fitting's lemma.
When every probe is a scalar plus a nilpotent, the nilpotent parts are
checked to span a nilpotent ideal of codimension one, which certifies that
the endomorphism ring is local.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from src.algebra import Algebra, is_division_ring
from src.kernel import Matrix, Subspace, fitting_power, flatten, poly_at, solve
from src.utils.exceptions import UndecidedError
from src.utils.verdict import Verdict
from .calculus import submodule_from_space
from .hom import hom_space
from .module import Module, ModuleMap, direct_sum

logger = logging.getLogger(__name__)


def _unflatten(v: Sequence, n: int, K) -> Matrix:
    return Matrix.from_row_vectors([tuple(v[r * n:(r + 1) * n]) for r in range(n)], n, K)


@dataclass
class Locality:
    """
    Outcome of probing End(M).

    Attributes:
        splitter: an endomorphism whose kernel and image split M, if found
        residue_dim: dim End(M) / N for the nilpotent ideal N found
        nilpotent: matrices spanning N
    """
    splitter: Optional[Matrix] = None
    residue_dim: int = 0
    nilpotent: List[Matrix] = field(default_factory=list)

    @property
    def split_local(self) -> bool:
        return self.splitter is None and self.residue_dim == 1


def _nilpotent_part(f: Matrix) -> Tuple[Optional[Matrix], Optional[Matrix]]:
    """
    (splitter, nilpotent) for one endomorphism: a Fitting splitter when the
    characteristic polynomial has several irreducible factors, otherwise
    g(f) for its unique irreducible factor g, which is nilpotent.
    """
    splitter = fitting_power(f)
    if splitter is not None:
        return splitter, None
    factors = f.charpoly_factors()
    g, _ = factors[0]
    return None, poly_at(g, f)


def _closed_nilpotent_span(mats: Sequence[Matrix], n: int, K) -> Tuple[bool, Subspace]:
    """Span of ``mats``; True when it is closed under products and nilpotent."""
    span = Subspace.span([flatten(x) for x in mats], n * n, K)
    basis = [_unflatten(v, n, K) for v in span.vectors()]
    for x in basis:
        for y in basis:
            if not span.contains(flatten(x @ y)):
                return False, span
    power = span
    for _ in range(n):
        if power.dim == 0:
            break
        layer = [_unflatten(v, n, K) for v in power.vectors()]
        power = Subspace.span([flatten(x @ y) for x in layer for y in basis], n * n, K)
    return power.dim == 0, span


def probe_endomorphisms(m: Module) -> Locality:
    """Look for a Fitting splitter of End(M), else certify a nilpotent ideal."""
    K = m.field
    n = m.dim
    ends = [f.matrix for f in hom_space(m, m)]
    nilpotents: List[Matrix] = []

    def visit(f: Matrix) -> Optional[Matrix]:
        splitter, nil = _nilpotent_part(f)
        if splitter is not None:
            return splitter
        nilpotents.append(nil)
        return None

    for f in ends:
        s = visit(f)
        if s is not None:
            return Locality(splitter=s)
    closed, span = _closed_nilpotent_span(nilpotents, n, K)
    if not closed:
        extra = [x @ y for x in ends for y in ends]
        extra += [ends[i] + ends[j] for i in range(len(ends)) for j in range(i + 1, len(ends))]
        for f in extra:
            s = visit(f)
            if s is not None:
                return Locality(splitter=s)
        closed, span = _closed_nilpotent_span(nilpotents, n, K)
        if not closed:
            raise UndecidedError(f"no probe endomorphism splits {m.name} and the nilpotent parts do not close up")
    if span.contains(flatten(Matrix.identity(n, K))):
        raise UndecidedError(f"nilpotent parts of End({m.name}) span the identity")
    return Locality(residue_dim=len(ends) - span.dim,
                    nilpotent=[_unflatten(v, n, K) for v in span.vectors()])


def _residue_is_division_ring(m: Module, loc: Locality) -> Verdict:
    """End(M)/N as a one-vertex algebra, tested with is_division_ring."""
    K = m.field
    n = m.dim
    ends = [f.matrix for f in hom_space(m, m)]
    nil = Subspace.span([flatten(x) for x in loc.nilpotent], n * n, K)
    chosen = [Matrix.identity(n, K)]
    span = nil + Subspace.span([flatten(chosen[0])], n * n, K)
    for f in ends:
        if not span.contains(flatten(f)):
            chosen.append(f)
            span = span + Subspace.span([flatten(f)], n * n, K)
    q = len(chosen)
    # nilpotent rows first, so the trailing coordinates are the residue class
    system = Matrix.from_row_vectors([flatten(x) for x in loc.nilpotent] + [flatten(c) for c in chosen],
                                     n * n, K).transpose()
    right = []
    for j in range(q):
        rows = []
        for i in range(q):
            sol = solve(system, flatten(chosen[j] @ chosen[i])).solution
            if sol is None:
                return Verdict.undetermined(f"nilpotent part of End({m.name}) is not an ideal")
            rows.append(tuple(sol[len(loc.nilpotent):]))
        right.append(Matrix.from_row_vectors(rows, q, K))
    labels = ["1"] + [f"u{i}" for i in range(1, q)]
    residue = Algebra(K, labels, right, [(0, 0)] * q, [0], ["1"], name=f"End({m.name})/N")
    return is_division_ring(residue)


def is_indecomposable(m: Module) -> Verdict:
    """Local endomorphism ring; undetermined when the residue field cannot be decided."""
    if m.dim == 0:
        return Verdict.false("zero module")
    try:
        loc = probe_endomorphisms(m)
    except UndecidedError as e:
        return Verdict.undetermined(e.reason)
    if loc.splitter is not None:
        return Verdict.false("an endomorphism splits the module")
    if loc.residue_dim == 1:
        return Verdict.true("End is a scalar plus a nilpotent ideal", {"end_dim": len(loc.nilpotent) + 1})
    return _residue_is_division_ring(m, loc)


@dataclass
class Piece:
    """An indecomposable summand with its inclusion into the decomposed module."""
    module: Module
    inclusion: ModuleMap
    iso_class: int = -1
    # isomorphism from the class representative onto this piece
    from_representative: Optional[ModuleMap] = None
    split_local: bool = True


@dataclass
class Decomposition:
    """
    M = ⊕ pieces, grouped into isomorphism classes.

    Attributes:
        module: the decomposed module
        pieces: indecomposable summands with inclusions, ordered by
            (dimension, dimension vector, creation order)
        classes: one (representative, multiplicity) per isomorphism class
    """
    module: Module
    pieces: List[Piece]
    classes: List[Tuple[Module, int]]

    @property
    def count(self) -> int:
        return len(self.pieces)

    @property
    def basic_count(self) -> int:
        return len(self.classes)

    @property
    def split_local(self) -> bool:
        return all(p.split_local for p in self.pieces)

    def projections(self) -> List[Matrix]:
        """Matrices M -> piece: column blocks of the inverse of the stacked inclusions."""
        if not self.pieces:
            return []
        stacked = self.pieces[0].inclusion.matrix.vstack(*(p.inclusion.matrix for p in self.pieces[1:]))
        inv = stacked.inverse()
        out, start = [], 0
        for p in self.pieces:
            out.append(inv.cols_at(range(start, start + p.module.dim)))
            start += p.module.dim
        return out


def _split(m: Module, into: ModuleMap, out: List[Tuple[Module, ModuleMap, bool]]):
    loc = probe_endomorphisms(m)
    if loc.splitter is None:
        if loc.residue_dim != 1:
            verdict = _residue_is_division_ring(m, loc)
            if not verdict.is_true:
                raise UndecidedError(f"cannot split {m.name}: {verdict.reason}")
        out.append((m, into, loc.residue_dim == 1))
        return
    theta = loc.splitter
    ker_space = Subspace(theta.left_kernel())
    im_space = Subspace(theta)
    for space, tag in ((ker_space, "k"), (im_space, "i")):
        sub, inc = submodule_from_space(m, space, f"{m.name}.{tag}")
        _split(sub, inc.then(into), out)


def _find_iso(x: Module, y: Module) -> Optional[ModuleMap]:
    """An isomorphism between indecomposables: some f with g∘f invertible."""
    if x.dims != y.dims:
        return None
    forward = hom_space(x, y)
    backward = hom_space(y, x)
    for f in forward:
        if f.is_isomorphism():
            return f
    for f in forward:
        for g in backward:
            if (f.matrix @ g.matrix).is_invertible():
                return f
    return None


def decompose(m: Module) -> Decomposition:
    """
    Decompose M into indecomposables.

    Raises:
        UndecidedError: a non-split endomorphism ring could not be resolved
    """
    def build() -> Decomposition:
        raw: List[Tuple[Module, ModuleMap, bool]] = []
        if m.dim:
            _split(m, ModuleMap.identity(m), raw)
        order = sorted(range(len(raw)), key=lambda i: (raw[i][0].dim, raw[i][0].dims, i))
        pieces: List[Piece] = []
        classes: List[Tuple[Module, int]] = []
        for idx, i in enumerate(order):
            piece_mod, inc, local = raw[i]
            piece_mod = piece_mod.renamed(f"{m.name}[{idx + 1}]")
            inc = ModuleMap(piece_mod, m, inc.matrix)
            piece = Piece(piece_mod, inc, split_local=local)
            for c, (rep, mult) in enumerate(classes):
                iso = _find_iso(rep, piece_mod)
                if iso is not None:
                    piece.iso_class = c
                    piece.from_representative = iso
                    classes[c] = (rep, mult + 1)
                    break
            else:
                piece.iso_class = len(classes)
                piece.from_representative = ModuleMap.identity(piece_mod)
                classes.append((piece_mod, 1))
            pieces.append(piece)
        logger.debug(f"Decomposed {m.name} (dim {m.dim}): {[p.module.dims for p in pieces]}")
        return Decomposition(m, pieces, classes)

    return m.cache("decomposition", build)


def iso_test(x: Module, y: Module) -> Verdict:
    """Compare the multisets of indecomposable summands."""
    if x.algebra is not y.algebra:
        return Verdict.false("different algebras")
    if x.dims != y.dims:
        return Verdict.false("dimension vectors differ", {"left": list(x.dims), "right": list(y.dims)})
    if x.dim == 0:
        return Verdict.true("both zero")
    for f in hom_space(x, y):
        if f.is_isomorphism():
            return Verdict.true("a Hom basis element is bijective")
    try:
        dx, dy = decompose(x), decompose(y)
    except UndecidedError as e:
        return Verdict.undetermined(e.reason)
    remaining = [[rep, mult] for rep, mult in dy.classes]
    for rep, mult in dx.classes:
        for entry in remaining:
            if entry[1] and _find_iso(rep, entry[0]) is not None:
                if entry[1] != mult:
                    return Verdict.false(f"summand {rep.name} occurs {mult} vs {entry[1]} times")
                entry[1] = 0
                break
        else:
            return Verdict.false(f"summand {rep.name} has no partner", {"dims": list(rep.dims)})
    return Verdict.true("matching indecomposable summands", {"summands": dx.count})


def reassemble(d: Decomposition, name: Optional[str] = None) -> Module:
    """⊕ of the pieces as an external direct sum."""
    return direct_sum([p.module for p in d.pieces], name or f"⊕{d.module.name}").module
