"""Graph corpora for differential testing: exhaustive small graphs and seeded random ones."""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Sequence

import networkx as nx

from .graph import WeightedGraph

EDGE_PROBABILITIES = (0.3, 0.5, 0.8)


def connected_shapes(max_n: int) -> Iterator[nx.Graph]:
    """Every connected unlabeled simple graph with ``2 <= n <= max_n`` (atlas order).

    The networkx atlas covers graphs up to seven vertices.
    """
    if max_n > 7:
        raise ValueError("the graph atlas only covers n <= 7")
    for shape in nx.graph_atlas_g():
        n = shape.number_of_nodes()
        if 2 <= n <= max_n and nx.is_connected(shape):
            yield shape


def exhaustive_weighted(max_n: int, palette: Sequence[int]) -> Iterator[WeightedGraph]:
    """Every connected shape with ``n <= max_n`` under every weighting from ``palette``."""
    for shape in connected_shapes(max_n):
        n = shape.number_of_nodes()
        edges = sorted(tuple(sorted((u + 1, v + 1))) for u, v in shape.edges())
        for weights in itertools.product(palette, repeat=len(edges)):
            yield WeightedGraph.from_edges(n, [(u, v, w) for (u, v), w in zip(edges, weights)])


def random_graph(
    rng: random.Random, n: int, p: float, palette: Sequence[int]
) -> WeightedGraph:
    """G(n, p) with weights drawn uniformly from ``palette``; may be disconnected."""
    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.random() < p:
                edges.append((u, v, rng.choice(palette)))
    return WeightedGraph.from_edges(n, edges)


def trial_rng(seed: int, trial: int) -> random.Random:
    """Independent stream per trial so any single trial can be replayed alone."""
    return random.Random(seed * 1_000_003 + trial)


def random_trial(
    seed: int, trial: int, n_range: tuple[int, int], palette: Sequence[int]
) -> WeightedGraph:
    rng = trial_rng(seed, trial)
    n = rng.randint(*n_range)
    p = EDGE_PROBABILITIES[trial % len(EDGE_PROBABILITIES)]
    return random_graph(rng, n, p, palette)


def random_corpus(
    seed: int, trials: int, n_range: tuple[int, int], palette: Sequence[int]
) -> Iterator[WeightedGraph]:
    for t in range(trials):
        yield random_trial(seed, t, n_range, palette)


def random_connected(rng: random.Random, n: int, m: int, palette: Sequence[int]) -> WeightedGraph:
    """Random spanning tree plus extra uniform edges, ``m`` edges in total."""
    if not n - 1 <= m <= n * (n - 1) // 2:
        raise ValueError("edge count out of range for a connected simple graph")
    order = list(range(1, n + 1))
    rng.shuffle(order)
    chosen = set()
    for k in range(1, n):
        a, b = order[k], order[rng.randrange(k)]
        chosen.add((min(a, b), max(a, b)))
    rest = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if (u, v) not in chosen]
    chosen.update(rng.sample(rest, m - len(chosen)))
    return WeightedGraph.from_edges(n, [(u, v, rng.choice(palette)) for u, v in sorted(chosen)])
