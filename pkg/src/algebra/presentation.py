"""
Quiver-with-relations presentations and the ``.alg`` line format.

    # comment
    name kalck
    field Q            (or a prime: field 5)
    vertex 1 2 3
    arrow a 1 3        (label, source, target)
    relation a*c = 0   (sum of scalar-weighted paths; right side 0)
    lengthbound 4

Paths compose left to right: ``a*c`` traverses a, then c.
"""

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path as FilePath
from typing import Dict, List, Optional, Sequence, Tuple

from src.kernel import FieldSpec
from src.utils.exceptions import (
    ComposabilityError,
    MixedEndpointsError,
    PresentationSyntaxError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Arrow:
    label: str
    source: int
    target: int


@dataclass(frozen=True, order=True)
class Path:
    """A path in the quiver; ``arrows`` empty means the trivial path at ``source``."""
    source: int
    target: int
    arrows: Tuple[int, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)


@dataclass(frozen=True)
class Relation:
    terms: Tuple[Tuple[Fraction, Tuple[int, ...]], ...]
    text: str = ""
    line: int = 0


@dataclass(frozen=True)
class Presentation:
    """
    Quiver with relations and a length bound L: every path of length L is
    expected to vanish modulo the relations.
    """
    field: FieldSpec
    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]
    relations: Tuple[Relation, ...] = ()
    length_bound: int = 1
    name: str = "algebra"

    def vertex_index(self, label: str) -> int:
        return self.vertices.index(label)

    def path_label(self, path: Path) -> str:
        if not path.arrows:
            return f"e{self.vertices[path.source]}"
        labels = [self.arrows[i].label for i in path.arrows]
        if all(len(lbl) == 1 for lbl in labels):
            return "".join(labels)
        return "*".join(labels)

    def out_arrows(self, vertex: int) -> List[int]:
        return [i for i, a in enumerate(self.arrows) if a.source == vertex]

    def is_acyclic(self) -> bool:
        indegree = [0] * len(self.vertices)
        for a in self.arrows:
            indegree[a.target] += 1
        ready = [v for v, d in enumerate(indegree) if d == 0]
        seen = 0
        while ready:
            v = ready.pop()
            seen += 1
            for i in self.out_arrows(v):
                t = self.arrows[i].target
                indegree[t] -= 1
                if indegree[t] == 0:
                    ready.append(t)
        return seen == len(self.vertices)

    def longest_path(self) -> int:
        """Length of the longest path; acyclic quivers only."""
        best: Dict[int, int] = {}

        def depth(v: int) -> int:
            if v not in best:
                best[v] = max((1 + depth(self.arrows[i].target) for i in self.out_arrows(v)), default=0)
            return best[v]

        return max((depth(v) for v in range(len(self.vertices))), default=0)

    def paths_up_to(self, bound: int) -> List[Path]:
        """All paths of length <= bound: trivial paths by vertex, then by (length, labels)."""
        trivial = [Path(v, v) for v in range(len(self.vertices))]
        layer = [Path(a.source, a.target, (i,)) for i, a in enumerate(self.arrows)]
        longer: List[Path] = []
        length = 1
        while layer and length <= bound:
            longer.extend(layer)
            layer = [Path(p.source, self.arrows[i].target, p.arrows + (i,))
                     for p in layer for i in self.out_arrows(p.target)]
            length += 1
        longer.sort(key=lambda p: (p.length, [self.arrows[i].label for i in p.arrows]))
        return trivial + longer


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[-+*()]))")


def _parse_relation(text: str, pres_arrows: Dict[str, int], arrows: List[Arrow],
                    line: int, col0: int, source: Optional[str]) -> Relation:
    lhs, sep, rhs = text.partition("=")
    if not sep or rhs.strip() != "0":
        raise PresentationSyntaxError(line, col0 + 1, "relation must have the form '<sum of paths> = 0'", source)

    terms: Dict[Tuple[int, ...], Fraction] = {}
    pos = 0
    sign = Fraction(1)
    coeff = Fraction(1)
    path: List[int] = []
    expect_factor = True

    def flush(at: int):
        nonlocal coeff, path, sign
        if not path:
            raise PresentationSyntaxError(line, col0 + at + 1, "term without a path", source)
        key = tuple(path)
        terms[key] = terms.get(key, Fraction(0)) + sign * coeff
        coeff, path, sign = Fraction(1), [], Fraction(1)

    while pos < len(lhs):
        if lhs[pos:].strip() == "":
            break
        m = _TOKEN.match(lhs, pos)
        if not m:
            raise PresentationSyntaxError(line, col0 + pos + 1, f"unexpected character '{lhs[pos:].strip()[0]}'", source)
        start = m.start(m.lastgroup)
        if m.group("num"):
            if not expect_factor or path:
                raise PresentationSyntaxError(line, col0 + start + 1, "coefficients must precede the path", source)
            coeff *= Fraction(m.group("num"))
            expect_factor = False
        elif m.group("name"):
            if not expect_factor:
                raise PresentationSyntaxError(line, col0 + start + 1, "missing '*' between factors", source)
            label = m.group("name")
            if label not in pres_arrows:
                raise PresentationSyntaxError(line, col0 + start + 1, f"unknown arrow '{label}'", source)
            path.append(pres_arrows[label])
            expect_factor = False
        else:
            op = m.group("op")
            if op == "*":
                if expect_factor:
                    raise PresentationSyntaxError(line, col0 + start + 1, "dangling '*'", source)
                expect_factor = True
            elif op in "+-":
                if path:
                    flush(start)
                elif not expect_factor or coeff != 1:
                    raise PresentationSyntaxError(line, col0 + start + 1, f"unexpected '{op}'", source)
                if op == "-":
                    sign = -sign
                expect_factor = True
            else:
                raise PresentationSyntaxError(line, col0 + start + 1, "parentheses are not supported", source)
        pos = m.end()
    if expect_factor and not path:
        raise PresentationSyntaxError(line, col0 + len(lhs) + 1, "relation ends unexpectedly", source)
    flush(len(lhs))

    relation_text = text.strip()
    for p in terms:
        for a, b in zip(p, p[1:]):
            if arrows[a].target != arrows[b].source:
                label = "*".join(arrows[i].label for i in p)
                raise ComposabilityError(label, source, line)
        if len(p) < 2:
            raise PresentationSyntaxError(line, col0 + 1, "relations must use paths of length >= 2", source)
    ends = {(arrows[p[0]].source, arrows[p[-1]].target) for p in terms}
    if len(ends) > 1:
        raise MixedEndpointsError(relation_text, line)
    kept = tuple((c, p) for p, c in terms.items() if c != 0)
    return Relation(kept, relation_text, line)


def parse_presentation(text: str, source: Optional[str] = None) -> Presentation:
    """
    Parse the ``.alg`` format into a validated Presentation.

    Args:
        text: file contents
        source: file name used in error messages

    Returns:
        Presentation with composability and endpoint checks done
    """
    field_spec = FieldSpec.rationals()
    vertices: List[str] = []
    arrows: List[Arrow] = []
    arrow_index: Dict[str, int] = {}
    pending_relations: List[Tuple[int, int, str]] = []
    length_bound: Optional[int] = None
    name = FilePath(source).stem if source else "algebra"

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        keyword, _, rest = line.strip().partition(" ")
        rest_col = indent + len(keyword) + 1
        args = rest.split()

        if keyword == "field":
            if len(args) != 1:
                raise PresentationSyntaxError(lineno, rest_col + 1, "expected 'field Q' or 'field <prime>'", source)
            try:
                field_spec = FieldSpec.parse(args[0])
            except ValueError as e:
                raise PresentationSyntaxError(lineno, rest_col + 1, str(e), source)
        elif keyword == "name":
            name = rest.strip() or name
        elif keyword == "vertex":
            if not args:
                raise PresentationSyntaxError(lineno, rest_col + 1, "expected vertex labels", source)
            for v in args:
                if v in vertices:
                    raise PresentationSyntaxError(lineno, line.index(v, rest_col - 1) + 1, f"duplicate vertex '{v}'", source)
                vertices.append(v)
        elif keyword == "arrow":
            if len(args) != 3:
                raise PresentationSyntaxError(lineno, rest_col + 1, "expected 'arrow <label> <source> <target>'", source)
            label, s, t = args
            if label in arrow_index:
                raise PresentationSyntaxError(lineno, rest_col + 1, f"duplicate arrow '{label}'", source)
            for v in (s, t):
                if v not in vertices:
                    raise PresentationSyntaxError(lineno, line.index(v, rest_col + len(label)) + 1, f"unknown vertex '{v}'", source)
            arrow_index[label] = len(arrows)
            arrows.append(Arrow(label, vertices.index(s), vertices.index(t)))
        elif keyword == "relation":
            pending_relations.append((lineno, rest_col, rest))
        elif keyword == "lengthbound":
            if len(args) != 1 or not args[0].isdigit() or int(args[0]) < 1:
                raise PresentationSyntaxError(lineno, rest_col + 1, "length bound must be a positive integer", source)
            length_bound = int(args[0])
        else:
            raise PresentationSyntaxError(lineno, indent + 1, f"unknown keyword '{keyword}'", source)

    if not vertices:
        raise PresentationSyntaxError(1, 1, "no vertices declared", source)

    relations = tuple(_parse_relation(body, arrow_index, arrows, lineno, col, source)
                      for lineno, col, body in pending_relations)

    presentation = Presentation(field_spec, tuple(vertices), tuple(arrows), relations, 1, name)
    longest_relation = max((len(p) for r in relations for _, p in r.terms), default=0)
    if length_bound is None:
        if not presentation.is_acyclic():
            raise PresentationSyntaxError(1, 1, "quiver has oriented cycles: a 'lengthbound' line is required", source)
        length_bound = max(presentation.longest_path() + 1, longest_relation, 1)
    elif length_bound < longest_relation:
        raise PresentationSyntaxError(1, 1, f"lengthbound {length_bound} is shorter than a relation ({longest_relation})", source)

    logger.debug(f"Parsed presentation '{name}': {len(vertices)} vertices, {len(arrows)} arrows, "
                 f"{len(relations)} relations, L={length_bound}")
    return Presentation(field_spec, tuple(vertices), tuple(arrows), relations, length_bound, name)


def load_presentation(path: str) -> Presentation:
    return parse_presentation(FilePath(path).read_text(), source=str(path))
