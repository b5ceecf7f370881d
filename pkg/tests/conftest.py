import random
import sys
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from freeconv.graph import (
    ColoredRootedGraph,
    broom_with_root_loop,
    centered_path,
    cherry_with_root_loop,
    path_with_root_loop,
)
from freeconv.series import Dist

small_fractions = st.builds(
    Fraction, st.integers(min_value=-4, max_value=4), st.integers(min_value=1, max_value=3)
)


def dists(order):
    return st.lists(small_fractions, min_size=order, max_size=order).map(Dist)


def random_dist(rng: random.Random, order: int, nonzero_mean: bool = False) -> Dist:
    moments = []
    for n in range(order):
        num = rng.randint(-4, 4)
        if n == 0 and nonzero_mean and num == 0:
            num = rng.choice([-2, -1, 1, 2, 3])
        moments.append(Fraction(num, rng.randint(1, 3)))
    return Dist(moments)


def random_factor(rng: random.Random, max_vertices: int = 4) -> ColoredRootedGraph:
    """Connected rooted multigraph with optional loops and a double edge now and then."""
    n = rng.randint(1, max_vertices)
    names = ["e"] + [f"v{i}" for i in range(1, n)]
    edges = []
    for i in range(1, n):
        edges.append((names[rng.randrange(i)], names[i], 1, rng.choice([1, 1, 1, 2])))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.25:
                edges.append((names[i], names[j], 1, 1))
    for i in range(n):
        if rng.random() < 0.4:
            edges.append((names[i], names[i], 1, 1))
    return ColoredRootedGraph(names, "e", edges)


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture
def path_loop():
    return path_with_root_loop()


@pytest.fixture
def broom_loop():
    return broom_with_root_loop()


@pytest.fixture
def cherry():
    return cherry_with_root_loop()


@pytest.fixture
def centered():
    return centered_path()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
