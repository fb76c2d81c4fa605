"""
Seeded instance generator.

A generated instance is the intersection graph of random unit intervals
plus a few noise vertices with random neighbourhoods; deleting the noise
always leaves a unit interval graph, so opt <= noise.
"""

import logging
import random
from fractions import Fraction
from typing import List, Optional

from .graph_core import Graph, VertexId, serialize
from .recognition import UnitIntervalModel

logger = logging.getLogger(__name__)

# left endpoints live on a grid of 1/GRID
GRID = 1000
DEFAULT_NOISE_DENSITY = 0.5


def default_span(n: int) -> Fraction:
    return Fraction(n, 4)


def random_unit_interval_model(
    n: int, rng: random.Random, span: Optional[Fraction] = None
) -> UnitIntervalModel:
    """
    n unit intervals with pairwise distinct endpoints inside [0, span].

    Spans too short for n distinct grid positions are widened.
    """
    span = default_span(n) if span is None else Fraction(span)
    slots = max(int((span - 1) * GRID), 3 * n)
    taken: set = set()
    lefts: List[int] = []
    while len(lefts) < n:
        pos = rng.randint(0, slots)
        # no shared left endpoints, and no left endpoint on another's right endpoint
        if pos in taken or pos - GRID in taken or pos + GRID in taken:
            continue
        taken.add(pos)
        lefts.append(pos)

    ids = list(range(n))
    rng.shuffle(ids)
    return UnitIntervalModel({
        v: (Fraction(pos, GRID), Fraction(pos, GRID) + 1) for v, pos in zip(ids, lefts)
    })


def intersection_graph(model: UnitIntervalModel) -> Graph:
    """Graph with an edge for every pair of overlapping intervals."""
    order = sorted(model.intervals, key=model.lp)
    edges = []
    for i, u in enumerate(order):
        for v in order[i + 1:]:
            if model.lp(v) > model.rp(u):
                break
            edges.append((u, v))
    return Graph.from_edges(order, edges)


def generate(
    n: int,
    noise: int = 0,
    seed: int = 0,
    span: Optional[Fraction] = None,
    noise_density: float = DEFAULT_NOISE_DENSITY,
) -> Graph:
    """
    Generate a UIVD instance, deterministic per argument tuple.

    Args:
        n: Number of interval vertices (ids 0..n-1)
        noise: Number of noise vertices (ids n..n+noise-1)
        seed: PRNG seed
        span: Length of the line the intervals are drawn on, default n/4
        noise_density: Probability a noise vertex sees any earlier vertex
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    rng = random.Random(seed)
    base = intersection_graph(random_unit_interval_model(n, rng, span))

    edges = base.edges()
    vertices: List[VertexId] = list(base.vertices)
    for extra in range(n, n + noise):
        edges.extend((v, extra) for v in vertices if rng.random() < noise_density)
        vertices.append(extra)

    graph = Graph.from_edges(vertices, edges)
    logger.debug(f"Generated n={graph.n}, m={graph.m} (noise={noise}, seed={seed})")
    return graph


def generate_text(n: int, noise: int = 0, seed: int = 0, **kwargs) -> str:
    text, _ = serialize(generate(n, noise, seed, **kwargs))
    return text
