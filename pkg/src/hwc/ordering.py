"""
Total orders on the simples, written from smallest weight to largest.
"""

from dataclasses import dataclass
from typing import Iterator, List, Tuple

from src.algebra import Algebra
from src.utils.exceptions import InvalidOrderingError


@dataclass(frozen=True)
class Ordering:
    """
    Attributes:
        weights: vertex indices, smallest weight first
    """
    weights: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.weights) != list(range(len(self.weights))):
            raise InvalidOrderingError([w + 1 for w in self.weights], len(self.weights))

    @classmethod
    def identity(cls, n: int) -> "Ordering":
        return cls(tuple(range(n)))

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self) -> Iterator[int]:
        return iter(self.weights)

    def position(self, v: int) -> int:
        return self.weights.index(v)

    def higher(self, v: int) -> Tuple[int, ...]:
        """Vertices of larger weight than v."""
        return self.weights[self.position(v) + 1:]

    def labels(self, a: Algebra) -> List[str]:
        return [a.vertex_labels[v] for v in self.weights]

    def format(self, a: Algebra) -> str:
        return "(" + ",".join(self.labels(a)) + ")"


def parse_ordering(a: Algebra, text: str) -> Ordering:
    """
    Comma-separated vertex labels, smallest weight first, e.g. ``1,3,2``.

    Raises:
        InvalidOrderingError: unknown label, repetition or wrong length
    """
    items = [t.strip() for t in text.split(",") if t.strip()]
    if len(items) != a.n_vertices or len(set(items)) != len(items):
        raise InvalidOrderingError(items, a.n_vertices)
    weights = []
    for item in items:
        if item not in a.vertex_labels:
            raise InvalidOrderingError(items, a.n_vertices)
        weights.append(a.vertex_labels.index(item))
    return Ordering(tuple(weights))
