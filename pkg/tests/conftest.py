import random
from fractions import Fraction

import pytest

from densdel.graph import MultiGraph
from densdel.rational import Cost


def random_multigraph(rng, max_n=8, max_m=12, loops=True):
    n = rng.randint(1, max_n)
    m = rng.randint(0, max_m) if (loops or n > 1) else 0
    edges = []
    for _ in range(m):
        a = rng.randrange(n)
        b = rng.randrange(n)
        if not loops:
            while b == a:
                b = rng.randrange(n)
        edges.append((a, b))
    return MultiGraph(n, edges)


def random_costs(rng, n, allow_infinite=False):
    costs = []
    for _ in range(n):
        if allow_infinite and rng.random() < 0.15:
            costs.append(Cost.infinite())
        else:
            costs.append(Cost(Fraction(rng.randint(1, 10), rng.randint(1, 4))))
    return tuple(costs)


@pytest.fixture
def rng():
    return random.Random(20240817)
