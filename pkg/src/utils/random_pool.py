"""
Random admissible monomial algebras for sweeps and property tests.

Not re-exported from ``src.utils``: it builds algebras, and the algebra
package itself imports from ``src.utils``.
"""

import logging
import random
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from src.algebra import Algebra, build_algebra, parse_presentation

logger = logging.getLogger(__name__)

ARROW_LABELS = "abcdfghkmnpqrstuvwxyz"

Quiver = List[Tuple[str, int, int]]


def _paths(quiver: Quiver, n: int, length: int) -> List[Tuple[int, ...]]:
    """All paths with exactly ``length`` arrows, as arrow index tuples."""
    if length == 0:
        return []
    current = [(i,) for i in range(len(quiver))]
    for _ in range(length - 1):
        current = [p + (j,) for p in current for j, (_, s, _) in enumerate(quiver) if s == quiver[p[-1]][2]]
    return current


def _contains(path: Tuple[int, ...], zeros: Set[Tuple[int, ...]]) -> bool:
    for i in range(len(path)):
        for j in range(i + 2, len(path) + 1):
            if path[i:j] in zeros:
                return True
    return False


def random_presentation(rng: random.Random, max_simples: int = 4, max_dim: int = 12,
                        field: str = "Q", name: str = "random") -> Optional[str]:
    """
    ``.alg`` text of a random monomial quotient of a path algebra, or None
    when the draw exceeds ``max_dim``. Paths of length ``lengthbound`` are
    always relations, so the result is admissible.
    """
    n = rng.randint(1, max_simples)
    quiver: Quiver = []
    for _ in range(rng.randint(0, n + 1)):
        s, t = rng.randrange(n), rng.randrange(n)
        if s == t and rng.random() < 0.7:
            continue
        quiver.append((ARROW_LABELS[len(quiver)], s, t))
    bound = rng.choice((2, 3))

    zeros: Set[Tuple[int, ...]] = set()
    for p in _paths(quiver, n, 2):
        if rng.random() < 0.4:
            zeros.add(p)
    for p in _paths(quiver, n, bound):
        if not _contains(p, zeros):
            zeros.add(p)

    dim = n + len(quiver)
    for length in range(2, bound):
        dim += sum(1 for p in _paths(quiver, n, length) if not _contains(p, zeros))
    if dim > max_dim:
        return None

    lines = [f"name {name}", f"field {field}", "vertex " + " ".join(str(v + 1) for v in range(n))]
    lines += [f"arrow {label} {s + 1} {t + 1}" for label, s, t in quiver]
    minimal = sorted(p for p in zeros if not any(q != p and _contains(p, {q}) for q in zeros))
    lines += ["relation " + "*".join(quiver[i][0] for i in p) + " = 0" for p in minimal]
    lines.append(f"lengthbound {bound}")
    return "\n".join(lines) + "\n"


def random_algebra(seed: int, fields: Sequence[str] = ("Q", "5"), max_simples: int = 4,
                   max_dim: int = 12) -> Algebra:
    """Deterministic in ``seed``: redraws until the dimension bound is met."""
    rng = random.Random(seed)
    while True:
        field = rng.choice(list(fields))
        text = random_presentation(rng, max_simples, max_dim, field, f"pool{seed}")
        if text is not None:
            return build_algebra(parse_presentation(text, f"pool{seed}.alg"))


def random_pool(count: int, start: int = 0, **kwargs) -> Iterator[Tuple[int, Algebra]]:
    """``count`` pool algebras, keyed by seed."""
    for seed in range(start, start + count):
        a = random_algebra(seed, **kwargs)
        logger.debug(f"Pool algebra {seed}: {a.n_vertices} simples, dim {a.dim}, field {a.field}")
        yield seed, a
