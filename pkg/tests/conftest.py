from itertools import combinations

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from pmin_inherit.graph import WeightedGraph

settings.register_profile("default", deadline=None, max_examples=80)
settings.load_profile("default")


def graph(n, *edges):
    """Shorthand: ``graph(3, (1, 2, 1), (2, 3, 2))``."""
    return WeightedGraph.from_edges(n, edges)


@st.composite
def weighted_graphs(draw, min_n=1, max_n=7, palette=(1, 2, 3)):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    weights = draw(st.lists(st.sampled_from(palette), min_size=len(chosen), max_size=len(chosen)))
    return WeightedGraph.from_edges(n, [(u, v, w) for (u, v), w in zip(chosen, weights)])


# Fixed instances reused across test modules.
PATH_12 = graph(3, (1, 2, 1), (2, 3, 2))
STAR_123 = graph(4, (1, 2, 1), (1, 3, 2), (1, 4, 3))
TWO_SQUARES = graph(5, (1, 2, 1), (2, 3, 1), (3, 4, 2), (4, 1, 2), (3, 5, 2), (5, 1, 2))
PAN = graph(6, (1, 2, 2), (2, 3, 2), (3, 4, 3), (4, 5, 3), (5, 1, 3), (2, 6, 1))
PAN_HEAVY_TAIL = graph(6, (1, 2, 2), (2, 3, 2), (3, 4, 3), (4, 5, 3), (5, 1, 3), (2, 6, 2))
PAN_WITH_CHORD = graph(
    6, (1, 2, 2), (2, 3, 2), (3, 4, 3), (4, 5, 3), (5, 1, 3), (2, 6, 1), (1, 3, 3)
)
THETA = graph(6, (1, 2, 1), (1, 3, 2), (3, 2, 2), (1, 4, 2), (4, 5, 2), (5, 2, 2))
THETA_LIGHT_START = graph(6, (1, 2, 1), (1, 3, 2), (3, 2, 1), (1, 4, 2), (4, 5, 2), (5, 2, 2))
TWO_TRIANGLES = graph(4, (1, 2, 1), (1, 3, 2), (2, 3, 2), (1, 4, 2), (2, 4, 2))


@pytest.fixture
def fixed():
    return {
        "path": PATH_12,
        "star": STAR_123,
        "squares": TWO_SQUARES,
        "pan": PAN,
    }
