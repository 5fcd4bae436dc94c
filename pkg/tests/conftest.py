import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dilworth_cographs import generators as gen
from dilworth_cographs.graph import from_edge_list


@pytest.fixture
def P4():
    return gen.path(4)


@pytest.fixture
def P5():
    return gen.path(5)


@pytest.fixture
def C5():
    return gen.cycle(5)


@pytest.fixture
def K23():
    return gen.complete_multipartite([2, 3])


@pytest.fixture
def house():
    return gen.house_graph()


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_graph(rng, n, p=0.5):
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
