import random

import pytest

from placticc import words as W


def random_column(rng: random.Random, n: int, allow_empty: bool = False) -> tuple:
    cols = W.admissible_columns(n, strict=not allow_empty)
    return rng.choice(cols)


def random_decorated_word(rng: random.Random, n: int, max_cols: int = 4,
                          allow_empty: bool = True) -> tuple:
    """A tuple of random admissible columns (ε included unless disabled)."""
    k = rng.randint(1, max_cols)
    return tuple(random_column(rng, n, allow_empty) for _ in range(k))


@pytest.fixture
def rng():
    return random.Random(20260826)
