import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from nmtree.harness import GeneratorConfig, generate_skeleton, random_point
from nmtree.tree import parse_point, parse_tree

DATA = Path(__file__).parent / "data"

Y_TREE = (DATA / "y.tree").read_text()


@pytest.fixture
def ytree():
    return parse_tree(Y_TREE)


@pytest.fixture
def P(ytree):
    return lambda s: parse_point(ytree, s)


@st.composite
def trees_with_points(draw, n_points=3, min_vertices=1, max_vertices=9):
    """A random skeleton plus ``n_points`` random points on it."""
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    cfg = GeneratorConfig(seed=0, min_vertices=min_vertices, max_vertices=max_vertices, max_denominator=6)
    sk = generate_skeleton(cfg, rng)
    return sk, [random_point(sk, rng) for _ in range(n_points)]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
