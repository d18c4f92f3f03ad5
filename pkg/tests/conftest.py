import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def random_zeta_word(rng, g, length):
    m = 2 * g + 1
    return tuple(rng.choice([1, -1]) * rng.randrange(1, m + 1) for _ in range(length))
