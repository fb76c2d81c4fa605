"""
Small named graphs and brute-force reference checks shared by the tests.
"""

import random
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from uivd.graph_core import Edge, Graph

# all graphs on this many vertices are checked exhaustively
EXHAUSTIVE_N = 6


def make_graph(n: int, edges: Iterable[Edge]) -> Graph:
    return Graph.from_edges(range(n), edges)


def path(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def clique(n: int) -> Graph:
    return make_graph(n, combinations(range(n), 2))


def claw() -> Graph:
    """Centre 0, leaves 1, 2, 3."""
    return make_graph(4, [(0, 1), (0, 2), (0, 3)])


def net() -> Graph:
    """Triangle 0, 1, 2 with pendants 3, 4, 5."""
    return make_graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])


def tent() -> Graph:
    """Triangle 0, 1, 2; vertex 3 + i sees the two triangle vertices other than i."""
    return make_graph(6, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (2, 4), (0, 5), (1, 5)])


def disjoint_union(*graphs: Graph) -> Graph:
    """Relabel each graph after the previous ones and put them side by side."""
    vertices: List[int] = []
    edges: List[Edge] = []
    offset = 0
    for g in graphs:
        index = {v: offset + i for i, v in enumerate(g.vertices)}
        vertices.extend(index.values())
        edges.extend((index[u], index[v]) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(vertices, edges)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return make_graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def all_graphs(n: int) -> Iterator[Graph]:
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield make_graph(n, [e for bit, e in enumerate(pairs) if mask >> bit & 1])


_CLAW = claw().to_networkx()
_NET = net().to_networkx()
_TENT = tent().to_networkx()


def _is_hole(h: nx.Graph) -> bool:
    return h.number_of_nodes() >= 4 and all(d == 2 for _, d in h.degree()) and nx.is_connected(h)


def brute_force_obstruction(g: Graph) -> Optional[Tuple[int, ...]]:
    """Some vertex set inducing a claw, net, tent or hole, or None."""
    h = g.to_networkx()
    for size in range(4, g.n + 1):
        for subset in combinations(g.vertices, size):
            sub = h.subgraph(subset)
            edges = sub.number_of_edges()
            if edges == size and _is_hole(sub):
                return subset
            if size == 4 and edges == 3 and nx.is_isomorphic(sub, _CLAW):
                return subset
            if size == 6 and edges == 6 and nx.is_isomorphic(sub, _NET):
                return subset
            if size == 6 and edges == 9 and nx.is_isomorphic(sub, _TENT):
                return subset
    return None


def brute_force_is_unit_interval(g: Graph) -> bool:
    return brute_force_obstruction(g) is None


def brute_force_shortest_hole(g: Graph) -> Optional[int]:
    h = g.to_networkx()
    for size in range(4, g.n + 1):
        for subset in combinations(g.vertices, size):
            sub = h.subgraph(subset)
            if sub.number_of_edges() == size and _is_hole(sub):
                return size
    return None


def brute_force_opt(g: Graph) -> int:
    for size in range(g.n + 1):
        for subset in combinations(g.vertices, size):
            if brute_force_is_unit_interval(g.delete_vertices(subset)):
                return size
    return g.n


def induces(g: Graph, vertices: Sequence[int], pattern: Graph) -> bool:
    return nx.is_isomorphic(g.to_networkx().subgraph(vertices), pattern.to_networkx())
