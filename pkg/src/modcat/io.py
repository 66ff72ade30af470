"""
Module files and command-line module expressions.

``.mod`` format, line oriented, ``#`` starts a comment:

    name D2
    dims 0 1 1
    action c = 0 1; 0 0
    action b = ...

``dims`` gives dim M e_v per vertex; each ``action`` line gives the matrix
of one basis element of the algebra (rows separated by ``;``). Idempotent
actions are implied by ``dims``; actions of basis elements that are not
listed are generated from the listed ones by multiplication.

Expressions: ``S<v>``, ``P<v>``, ``Lambda``, ``rad X``, ``top X``,
``soc X``, ``k*X``, ``X + Y``, parentheses and paths to ``.mod`` files.
"""

import logging
import re
from pathlib import Path as FilePath
from typing import Dict, List, Optional, Tuple

from src.algebra import Algebra
from src.kernel import Matrix, Subspace, Vector, solve
from src.utils.exceptions import ModuleExpressionError, ModuleFormatError
from .calculus import rad, soc, top
from .constructors import simple_module
from .module import Module, direct_sum, power, projective_module, regular_module

logger = logging.getLogger(__name__)


def _extend_actions(a: Algebra, dims: List[int], given: Dict[int, Matrix], source: Optional[str]) -> List[Matrix]:
    """Complete the action from the listed basis elements by closing under products."""
    K = a.field
    n = sum(dims)
    offsets = [sum(dims[:v]) for v in range(a.n_vertices)]
    known: List[Tuple[Vector, Matrix]] = []
    for v, ev in enumerate(a.idempotents):
        rows = [[K.zero] * n for _ in range(n)]
        for i in range(offsets[v], offsets[v] + dims[v]):
            rows[i][i] = K.one
        given.setdefault(ev, Matrix._raw(rows, (n, n), K))
    for k, mat in given.items():
        known.append((a.unit_vector(k), mat))

    span = Subspace.span([v for v, _ in known], a.dim, K)
    frontier = list(known)
    while span.dim < a.dim and frontier:
        fresh = []
        for u, mu in frontier:
            for w, mw in list(known):
                for vec, mat in ((a.multiply(u, w), mu @ mw), (a.multiply(w, u), mw @ mu)):
                    if not span.contains(vec):
                        span = span + Subspace.span([vec], a.dim, K)
                        fresh.append((vec, mat))
        known.extend(fresh)
        frontier = fresh
    if span.dim < a.dim:
        raise ModuleFormatError(f"listed actions generate only {span.dim} of {a.dim} basis elements", source)

    system = Matrix.from_row_vectors([v for v, _ in known], a.dim, K).transpose()
    actions = []
    for k in range(a.dim):
        if k in given:
            actions.append(given[k])
            continue
        coeffs = solve(system, a.unit_vector(k)).solution
        mat = Matrix.zeros(n, n, K)
        for c, (_, m) in zip(coeffs, known):
            if c:
                mat = mat + m.scale(c)
        actions.append(mat)
    return actions


def parse_module(text: str, a: Algebra, source: Optional[str] = None) -> Module:
    """
    Parse the ``.mod`` format over a given algebra.

    Raises:
        ModuleFormatError: bad syntax, unknown labels, wrong shapes or an
            action that is not a module structure
    """
    K = a.field
    name = FilePath(source).stem if source else "M"
    dims: Optional[List[int]] = None
    given: Dict[int, Matrix] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if keyword == "name":
                name = rest
            elif keyword == "dims":
                dims = [int(x) for x in rest.split()]
                if len(dims) != a.n_vertices:
                    raise ModuleFormatError(f"dims lists {len(dims)} vertices, algebra has {a.n_vertices}", source, lineno)
            elif keyword == "action":
                if dims is None:
                    raise ModuleFormatError("action before dims", source, lineno)
                label, eq, body = rest.partition("=")
                if not eq:
                    raise ModuleFormatError("expected 'action <label> = rows'", source, lineno)
                label = label.strip()
                if label not in a.labels:
                    raise ModuleFormatError(f"unknown basis element '{label}'", source, lineno)
                n = sum(dims)
                rows = [[K(x) for x in r.split()] for r in body.split(";")] if n else []
                if len(rows) != n or any(len(r) != n for r in rows):
                    raise ModuleFormatError(f"action of '{label}' is not {n}x{n}", source, lineno)
                given[a.labels.index(label)] = Matrix._raw(rows, (n, n), K)
            else:
                raise ModuleFormatError(f"unknown keyword '{keyword}'", source, lineno)
        except ValueError as e:
            raise ModuleFormatError(str(e), source, lineno)
    if dims is None:
        raise ModuleFormatError("missing dims line", source)
    m = Module(a, dims, _extend_actions(a, dims, given, source), name)
    if not m.check():
        raise ModuleFormatError("actions do not define a module", source)
    logger.debug(f"Loaded module {name} with dims {list(m.dims)}")
    return m


def load_module(path: str, a: Algebra) -> Module:
    return parse_module(FilePath(path).read_text(), a, source=str(path))


_TOKEN = re.compile(r"\s*(?:([()+*])|([^\s()+*]+))")


def _tokenize(text: str) -> List[str]:
    tokens, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ModuleExpressionError(text, f"unexpected character at {pos + 1}")
        tokens.append(m.group(1) or m.group(2))
        pos = m.end()
    return tokens


class _ExpressionParser:
    """expr := term ('+' term)* ; term := [int '*'] factor ; factor := op factor | atom | '(' expr ')'"""

    def __init__(self, a: Algebra, text: str, base_dir: Optional[str]):
        self.a = a
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.base_dir = base_dir

    def error(self, reason: str) -> ModuleExpressionError:
        return ModuleExpressionError(self.text, reason)

    def peek(self) -> Optional[str]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise self.error("unexpected end")
        self.pos += 1
        return tok

    def parse(self) -> Module:
        m = self.expr()
        if self.peek() is not None:
            raise self.error(f"unexpected '{self.peek()}'")
        return m

    def expr(self) -> Module:
        terms = [self.term()]
        while self.peek() == "+":
            self.take()
            terms.append(self.term())
        if len(terms) == 1:
            return terms[0]
        return direct_sum(terms, " + ".join(t.name for t in terms)).module

    def term(self) -> Module:
        tok = self.peek()
        if tok is not None and tok.isdigit() and self.pos + 1 < len(self.tokens) and self.tokens[self.pos + 1] == "*":
            k = int(self.take())
            self.take()
            if k < 1:
                raise self.error("multiplicity must be positive")
            return power(self.factor(), k).module
        return self.factor()

    def factor(self) -> Module:
        tok = self.take()
        if tok == "(":
            m = self.expr()
            if self.take() != ")":
                raise self.error("missing ')'")
            return m
        if tok in ("rad", "top", "soc"):
            inner = self.factor()
            op = {"rad": rad, "top": top, "soc": soc}[tok]
            return op(inner)[0]
        return self.atom(tok)

    def atom(self, tok: str) -> Module:
        a = self.a
        if tok in ("Lambda", "Λ"):
            return regular_module(a)
        if tok.endswith(".mod"):
            path = FilePath(tok)
            if self.base_dir and not path.is_absolute() and not path.exists():
                path = FilePath(self.base_dir) / path
            try:
                return load_module(str(path), a)
            except FileNotFoundError:
                raise self.error(f"module file '{tok}' not found")
        kind, label = tok[0], tok[1:]
        if kind in "SP" and label in a.vertex_labels:
            v = a.vertex_labels.index(label)
            return simple_module(a, v) if kind == "S" else projective_module(a, v)
        raise self.error(f"unknown module '{tok}'")


def resolve_module(a: Algebra, text: str, base_dir: Optional[str] = None) -> Module:
    """Evaluate a module expression such as ``S1``, ``rad P3`` or ``P1 + 2*S2``."""
    return _ExpressionParser(a, text, base_dir).parse()


def resolve_modules(a: Algebra, text: str, base_dir: Optional[str] = None) -> List[Module]:
    """Comma separated list of expressions."""
    return [resolve_module(a, part, base_dir) for part in text.split(",") if part.strip()]
