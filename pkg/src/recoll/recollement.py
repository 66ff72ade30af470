"""
The recollement attached to an idempotent e of Λ.

    mod Λ/ΛeΛ  --i_*-->  mod Λ  --j^!-->  mod eΛe

i_* is restriction along Λ -> Λ/ΛeΛ with left adjoint i^* = - ⊗ Λ/ΛeΛ and
right adjoint i^! (the largest submodule killed by ΛeΛ); j^! = - · e has
left adjoint j_! = - ⊗_{eΛe} eΛ and right adjoint j_* = Hom_{eΛe}(Λe, -).
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from src.algebra import Algebra, Ideal, QuotientMap, idempotent_ideal, quotient_algebra
from src.kernel import CoordinateSystem, Matrix, Subspace, flatten
from src.modcat import (
    Bimodule,
    Module,
    ModuleMap,
    cokernel,
    corner_bimodule,
    corner_indices,
    hom_space,
    kernel,
    quotient_bimodule,
    quotient_module,
    restriction_of_scalars,
    submodule_from_space,
    tensor_data,
)
from src.utils.exceptions import IncompatibleAlgebraError, InvalidIdempotentError

logger = logging.getLogger(__name__)


class RecollementData:
    """
    Λ together with eΛe and Λ/ΛeΛ for e = sum of the idempotents of ``vertices``.

    Attributes:
        algebra: Λ
        vertices: the chosen vertices, sorted
        corner: eΛe (the left algebra of ``corner_bimodule``)
        corner_indices: basis indices of Λ forming eΛe
        ideal: ΛeΛ
        quotient: Λ/ΛeΛ
        quotient_map: the projection Λ -> Λ/ΛeΛ
    """

    def __init__(self, a: Algebra, vertices: Sequence[int]):
        self.algebra = a
        self.vertices: Tuple[int, ...] = tuple(sorted(set(vertices)))
        for v in self.vertices:
            if not 0 <= v < a.n_vertices:
                raise InvalidIdempotentError(str(v + 1), f"algebra has {a.n_vertices} vertices")
        self.bimodule: Bimodule = corner_bimodule(a, self.vertices)
        self.corner: Algebra = self.bimodule.left
        chosen = set(self.vertices)
        self.corner_indices: Tuple[int, ...] = tuple(k for k, (s, t) in enumerate(a.blocks)
                                                     if s in chosen and t in chosen)
        self.ideal: Ideal = idempotent_ideal(a, self.vertices)
        self.quotient, self.quotient_map = quotient_algebra(a, self.ideal, f"{a.name}/{self.label}")
        self.quotient_bimodule: Bimodule = quotient_bimodule(a, self.ideal, f"{a.name}/{self.label}")
        if self.corner.dim + self.quotient.dim > a.dim:
            raise IncompatibleAlgebraError(f"recollement at {self.label}")
        logger.debug(f"Recollement of {a.name} at {self.label}: corner dim {self.corner.dim}, "
                     f"ideal dim {self.ideal.dim}, quotient dim {self.quotient.dim}")

    @property
    def label(self) -> str:
        if not self.vertices:
            return "0"
        return "+".join(f"e{self.algebra.vertex_labels[v]}" for v in self.vertices)

    def rows(self, x: Module) -> List[int]:
        """Basis positions of X·e."""
        return [i for v in self.vertices for i in x.block(v)]


def recollement(a: Algebra, vertices: Sequence[int]) -> RecollementData:
    key = tuple(sorted(set(vertices)))
    return a.cache(f"recollement{key}", lambda: RecollementData(a, key))


def parse_idempotent(a: Algebra, text: str) -> Tuple[int, ...]:
    """
    Vertices of an idempotent written as ``e2``, ``e1+e3``, ``0`` or ``1``.

    Raises:
        InvalidIdempotentError: unknown vertex label or malformed term
    """
    stripped = text.replace(" ", "")
    if stripped == "0":
        return ()
    if stripped == "1":
        return tuple(range(a.n_vertices))
    vertices = []
    for term in stripped.split("+"):
        if len(term) < 2 or term[0] != "e":
            raise InvalidIdempotentError(text, f"term '{term}' is not of the form e<vertex>")
        label = term[1:]
        if label not in a.vertex_labels:
            raise InvalidIdempotentError(text, f"unknown vertex '{label}'")
        v = a.vertex_labels.index(label)
        if v in vertices:
            raise InvalidIdempotentError(text, f"vertex '{label}' repeated")
        vertices.append(v)
    return tuple(sorted(vertices))


# -- j-side ---------------------------------------------------------------

def j_upper_shriek(rd: RecollementData, x: Module) -> Module:
    """j^!(X) = X·e as an eΛe-module."""
    if x.algebra is not rd.algebra:
        raise IncompatibleAlgebraError("j^!")
    rows = rd.rows(x)
    actions = [x.actions[k].extract(rows, rows) for k in rd.corner_indices]
    return Module(rd.corner, [x.dims[v] for v in rd.vertices], actions, f"{x.name}e")


def j_upper_shriek_map(rd: RecollementData, f: ModuleMap,
                       source: Optional[Module] = None, target: Optional[Module] = None) -> ModuleMap:
    src = source or j_upper_shriek(rd, f.source)
    tgt = target or j_upper_shriek(rd, f.target)
    return ModuleMap(src, tgt, f.matrix.extract(rd.rows(f.source), rd.rows(f.target)))


def j_lower_shriek(rd: RecollementData, z: Module) -> Module:
    """j_!(Z) = Z ⊗_{eΛe} eΛ."""
    return tensor_data(z, rd.bimodule, f"{z.name}⊗eΛ").module


def _column_module(rd: RecollementData, w: int) -> Tuple[List[int], Module]:
    """e_w Λ e as a right eΛe-module, with its basis indices in Λ."""
    a = rd.algebra
    position = {v: i for i, v in enumerate(rd.vertices)}
    indices = sorted((k for k in range(a.dim) if a.source(k) == w and a.target(k) in position),
                     key=lambda k: (position[a.target(k)], k))
    dims = [sum(1 for k in indices if a.target(k) == v) for v in rd.vertices]
    actions = [a.right[k].extract(indices, indices) for k in rd.corner_indices]
    return indices, Module(rd.corner, dims, actions, f"e{a.vertex_labels[w]}Λe")


def j_lower_star(rd: RecollementData, z: Module) -> Module:
    """
    j_*(Z) = Hom_{eΛe}(Λe, Z) with (f·λ)(x) = f(λx).

    The Hom space splits over the vertices w of Λ as ⊕ Hom(e_wΛe, Z), which
    gives a basis sorted by vertex.
    """
    if z.algebra is not rd.corner:
        raise IncompatibleAlgebraError("j_*")
    a = rd.algebra
    K = a.field
    columns = [_column_module(rd, w) for w in range(a.n_vertices)]
    full = [k for indices, _ in columns for k in indices]
    offset = {}
    start = 0
    for w, (indices, _) in enumerate(columns):
        offset[w] = start
        start += len(indices)
    n_full = len(full)

    maps: List[Matrix] = []
    dims = []
    for w, (indices, col) in enumerate(columns):
        local = hom_space(col, z)
        dims.append(len(local))
        for f in local:
            rows = [[K.zero] * z.dim for _ in range(n_full)]
            block = f.matrix.to_lists()
            for r, row in enumerate(block):
                rows[offset[w] + r] = list(row)
            maps.append(Matrix._raw(rows, (n_full, z.dim), K))

    system = CoordinateSystem([flatten(m) for m in maps], n_full * z.dim, K)
    actions = []
    for j in range(a.dim):
        left = a.left[j].extract(full, full)
        rows = [system.coordinates(flatten(left @ m)) for m in maps]
        actions.append(Matrix.from_row_vectors(rows, len(maps), K))
    return Module(a, dims, actions, f"Hom(Λe,{z.name})")


# -- i-side ---------------------------------------------------------------

def _descend(rd: RecollementData, m: Module, name: str) -> Module:
    """A Λ-module killed by ΛeΛ, read as a Λ/ΛeΛ-module."""
    qmap: QuotientMap = rd.quotient_map
    for v, w in enumerate(qmap.vertex_map):
        if w is None and m.dims[v]:
            raise IncompatibleAlgebraError(f"{m.name} is not annihilated by {rd.label}")
    dims = [m.dims[v] for v, w in enumerate(qmap.vertex_map) if w is not None]
    return Module(rd.quotient, dims, [m.actions[k] for k in qmap.kept], name)


def ideal_image_space(rd: RecollementData, x: Module) -> Subspace:
    """X·ΛeΛ."""
    rows = []
    for v in rd.ideal.vectors():
        rows.extend(x.act(v).row_vectors())
    return Subspace.span(rows, x.dim, x.field)


def annihilated_space(rd: RecollementData, x: Module) -> Subspace:
    """{m in X : m·ΛeΛ = 0}."""
    vectors = rd.ideal.vectors()
    if not vectors or x.dim == 0:
        return Subspace.whole(x.dim, x.field)
    stacked = x.act(vectors[0]).hstack(*(x.act(v) for v in vectors[1:]))
    return Subspace(stacked.left_kernel())


def i_lower_star(rd: RecollementData, y: Module) -> Module:
    """i_*(Y): restriction along Λ -> Λ/ΛeΛ."""
    if y.algebra is not rd.quotient:
        raise IncompatibleAlgebraError("i_*")
    qmap = rd.quotient_map
    return restriction_of_scalars(y, rd.algebra, qmap.matrix, qmap.vertex_map, y.name)


def i_upper_star(rd: RecollementData, x: Module) -> Module:
    """i^*(X) = X ⊗ Λ/ΛeΛ, computed as X / X·ΛeΛ."""
    quot, _ = quotient_module(x, ideal_image_space(rd, x), f"i*{x.name}")
    return _descend(rd, quot, quot.name)


def i_upper_shriek(rd: RecollementData, x: Module) -> Module:
    """i^!(X): the largest submodule of X annihilated by ΛeΛ."""
    sub, _ = submodule_from_space(x, annihilated_space(rd, x), f"i!{x.name}")
    return _descend(rd, sub, sub.name)


def unit_i(rd: RecollementData, x: Module) -> ModuleMap:
    """X -> i_*i^*(X)."""
    quot, proj = quotient_module(x, ideal_image_space(rd, x), f"i*{x.name}")
    target = i_lower_star(rd, _descend(rd, quot, quot.name))
    return ModuleMap(x, target, proj.matrix)


def counit_i(rd: RecollementData, x: Module) -> ModuleMap:
    """i_*i^!(X) -> X."""
    sub, inc = submodule_from_space(x, annihilated_space(rd, x), f"i!{x.name}")
    source = i_lower_star(rd, _descend(rd, sub, sub.name))
    return ModuleMap(source, x, inc.matrix)


# -- counit of (j_!, j^!) -------------------------------------------------

@dataclass
class CounitSequence:
    """
    0 -> K -> j_!j^!(X) --ε--> X -> X ⊗ Λ/ΛeΛ -> 0

    Attributes:
        module: X
        induced: j_!j^!(X)
        counit: ε_X
        kernel_dim: dim ker ε_X
        cokernel: X / im ε_X
        mono: ε_X is injective
        exact: im ε_X = X·ΛeΛ, the cokernel is killed by e and has the
            dimension of i^*(X), and the kernel is killed by j^!
    """
    module: Module
    induced: Module
    counit: ModuleMap
    kernel_dim: int
    cokernel: Module
    mono: bool
    exact: bool

    def to_dict(self):
        return {
            "module": self.module.name,
            "induced_dims": list(self.induced.dims),
            "kernel_dim": self.kernel_dim,
            "cokernel_dims": list(self.cokernel.dims),
            "mono": self.mono,
            "exact": self.exact,
        }


def counit_map(rd: RecollementData, x: Module) -> ModuleMap:
    """ε_X: X e ⊗_{eΛe} eΛ -> X, x ⊗ λ -> x·λ."""
    z = j_upper_shriek(rd, x)
    data = tensor_data(z, rd.bimodule, f"j!j^!{x.name}")
    rows_x = rd.rows(x)
    lam = corner_indices(rd.algebra, rd.vertices)
    out = []
    for q in data.kept:
        i, k = data.pairs[q]
        out.append(x.actions[lam[k]].row(rows_x[i]))
    return ModuleMap(data.module, x, Matrix.from_row_vectors(out, x.dim, x.field))


def counit_sequence(rd: RecollementData, x: Module) -> CounitSequence:
    eps = counit_map(rd, x)
    ker, _ = kernel(eps)
    coker, _ = cokernel(eps, f"{x.name}/{x.name}e")
    image_ok = Subspace(eps.matrix) == ideal_image_space(rd, x)
    killed = all(coker.dims[v] == 0 for v in rd.vertices) and all(ker.dims[v] == 0 for v in rd.vertices)
    exact = image_ok and killed and coker.dim == i_upper_star(rd, x).dim
    mono = ker.dim == 0
    logger.debug(f"Counit at {x.name} ({rd.label}): kernel {ker.dim}, cokernel {list(coker.dims)}, exact {exact}")
    return CounitSequence(x, eps.source, eps, ker.dim, coker, mono, exact)


# -- all six functors at once -----------------------------------------------

@dataclass
class FunctorImages:
    """
    The images of X under the recollement, taking Y = i^*(X) and Z = j^!(X).

    Attributes:
        adjunction: pairs of Hom dimensions the four adjunctions force to be
            equal, in the order (i^*, i_*), (i_*, i^!), (j_!, j^!), (j^!, j_*),
            each tested on the images of X
    """
    module: Module
    i_upper_star: Module
    i_lower_star: Module
    i_upper_shriek: Module
    j_upper_shriek: Module
    j_lower_shriek: Module
    j_lower_star: Module
    unit: ModuleMap
    counit: ModuleMap
    counit_j: ModuleMap
    adjunction: List[Tuple[int, int]]

    @property
    def adjunction_ok(self) -> bool:
        return all(left == right for left, right in self.adjunction)

    def to_dict(self):
        return {
            "module": self.module.name,
            "i^*": list(self.i_upper_star.dims),
            "i_*": list(self.i_lower_star.dims),
            "i^!": list(self.i_upper_shriek.dims),
            "j^!": list(self.j_upper_shriek.dims),
            "j_!": list(self.j_lower_shriek.dims),
            "j_*": list(self.j_lower_star.dims),
            "adjunction": [list(pair) for pair in self.adjunction],
            "adjunction_ok": self.adjunction_ok,
        }


def recollement_functors(rd: RecollementData, x: Module) -> FunctorImages:
    y = i_upper_star(rd, x)
    z = j_upper_shriek(rd, x)
    induced = j_lower_shriek(rd, z)
    coinduced = j_lower_star(rd, z)
    pushed = i_lower_star(rd, y)
    sub = i_upper_shriek(rd, x)
    end_z = len(hom_space(z, z))
    adjunction = [
        (len(hom_space(y, y)), len(hom_space(x, pushed))),
        (len(hom_space(i_lower_star(rd, sub), x)), len(hom_space(sub, sub))),
        (len(hom_space(induced, x)), end_z),
        (len(hom_space(x, coinduced)), end_z),
    ]
    images = FunctorImages(
        x, y, pushed, sub, z, induced, coinduced,
        unit_i(rd, x), counit_i(rd, x), counit_map(rd, x), adjunction,
    )
    if not images.adjunction_ok:
        logger.warning(f"Adjunction dimensions disagree at {x.name} ({rd.label}): {adjunction}")
    return images
