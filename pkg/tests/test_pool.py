import random

import pytest

from src.utils.random_pool import random_algebra, random_pool, random_presentation
from src.utils.sweeps import equivalence_sweep


def test_pool_is_deterministic():
    first = random_algebra(7)
    second = random_algebra(7)
    assert first.labels == second.labels
    assert first.right == second.right


def test_pool_respects_bounds():
    for _, a in random_pool(10, max_simples=3, max_dim=9):
        assert 1 <= a.n_vertices <= 3
        assert a.dim <= 9
        assert a.check_associative()


def test_presentation_is_admissible():
    text = None
    rng = random.Random(3)
    while text is None:
        text = random_presentation(rng, max_simples=3, max_dim=12)
    assert text.rstrip().splitlines()[-1].startswith("lengthbound")


@pytest.mark.slow
def test_equivalence_sweep():
    summary = equivalence_sweep(count=6, iyama_count=3)
    assert summary["algebras"] == 6
    assert summary["orderings"] >= 6
    assert summary["disagreements"] == []
    assert summary["property_failures"] == []
    assert summary["iyama_failures"] == []
