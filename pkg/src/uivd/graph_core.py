"""
UIVD Graph Core - simple undirected graphs with stable vertex ids.

Vertex ids are plain ints assigned densely at load time and never reused:
deleting or contracting vertices leaves the remaining ids untouched, so
reduction traces and kernels always speak about original vertices.
"""

import logging
import math
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

import networkx as nx

from .errors import DomainError, GraphParseError

logger = logging.getLogger(__name__)

VertexId = int
Edge = Tuple[VertexId, VertexId]

INFINITY = math.inf


class Graph:
    """Immutable simple undirected graph; every iteration is in id order."""

    __slots__ = ("_adj", "_sorted")

    def __init__(self, adjacency: Mapping[VertexId, Iterable[VertexId]]):
        self._adj: Dict[VertexId, FrozenSet[VertexId]] = {
            v: frozenset(nbrs) for v, nbrs in adjacency.items()
        }
        self._sorted: Dict[VertexId, Tuple[VertexId, ...]] = {}

    @classmethod
    def from_edges(cls, vertices: Iterable[VertexId], edges: Iterable[Edge]) -> "Graph":
        """Build a graph from a vertex collection and an edge list."""
        adj: Dict[VertexId, set] = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise DomainError(f"self-loop on vertex {u}")
            if u not in adj or v not in adj:
                raise DomainError(f"edge ({u}, {v}) references an unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
        return cls(adj)

    # Read access

    @property
    def vertices(self) -> Tuple[VertexId, ...]:
        return tuple(sorted(self._adj))

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(frozenset(self.edges())) ^ hash(frozenset(self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def neighbor_set(self, v: VertexId) -> FrozenSet[VertexId]:
        self._require(v)
        return self._adj[v]

    def neighbors(self, v: VertexId) -> Tuple[VertexId, ...]:
        """Neighbours of v in increasing id order."""
        cached = self._sorted.get(v)
        if cached is None:
            self._require(v)
            cached = tuple(sorted(self._adj[v]))
            self._sorted[v] = cached
        return cached

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return v in self._adj.get(u, ())

    def degree(self, v: VertexId) -> int:
        return len(self.neighbor_set(v))

    def edges(self) -> List[Edge]:
        """All edges (u, v) with u < v, sorted lexicographically."""
        return [(u, v) for u in self.vertices for v in self.neighbors(u) if u < v]

    # Derived graphs

    def induced_subgraph(self, keep: Iterable[VertexId]) -> "Graph":
        keep = frozenset(keep)
        dead = [v for v in keep if v not in self._adj]
        if dead:
            raise DomainError(f"vertices {sorted(dead)} are not in the graph")
        return Graph({v: self._adj[v] & keep for v in keep})

    def delete_vertices(self, drop: Iterable[VertexId]) -> "Graph":
        drop = frozenset(drop)
        dead = [v for v in drop if v not in self._adj]
        if dead:
            raise DomainError(f"vertices {sorted(dead)} are not in the graph")
        if not drop:
            return self
        return self.induced_subgraph(v for v in self._adj if v not in drop)

    def add_edges(self, edges: Iterable[Edge]) -> "Graph":
        """Return a copy with the given edges added (existing ones are kept)."""
        adj = {v: set(nbrs) for v, nbrs in self._adj.items()}
        for u, v in edges:
            if u == v:
                raise DomainError(f"self-loop on vertex {u}")
            self._require(u)
            self._require(v)
            adj[u].add(v)
            adj[v].add(u)
        return Graph(adj)

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(self.vertices)
        h.add_edges_from(self.edges())
        return h

    # Debug validation

    def validate(self) -> bool:
        """Walk every adjacency entry: symmetric, irreflexive, live ids only."""
        for v, nbrs in self._adj.items():
            if v in nbrs:
                logger.debug(f"self-loop on {v}")
                return False
            for u in nbrs:
                if u not in self._adj or v not in self._adj[u]:
                    logger.debug(f"asymmetric or dangling adjacency {v} -> {u}")
                    return False
        return True

    def _require(self, v: VertexId) -> None:
        if v not in self._adj:
            raise DomainError(f"vertex {v} is not in the graph")


@dataclass(frozen=True)
class Instance:
    """A UIVD instance: delete at most k vertices to reach a unit interval graph."""
    graph: Graph
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise DomainError(f"budget must be non-negative, got {self.k}")


def _parse_int_pair(line: str, line_number: int) -> Tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphParseError(line_number, f"expected two integers, got {line!r}")
    try:
        first, second = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError(line_number, f"expected two integers, got {line!r}")
    if first < 0 or second < 0:
        raise GraphParseError(line_number, f"negative value in {line!r}")
    return first, second


def load(text: str) -> Graph:
    """
    Parse the graph file format.

    Line 1 is "n m", followed by m lines "u v" with 0 <= u < v < n.
    A line "v u" with u < v is read as the edge (u, v); serialize only
    writes the ordered form. Lines starting with '#' and blank lines are
    ignored. Duplicate edges collapse to one edge.

    Args:
        text: File contents

    Returns:
        Graph on vertices 0..n-1

    Raises:
        GraphParseError: naming the offending line
    """
    header: Optional[Tuple[int, int]] = None
    header_line = 0
    edges: List[Edge] = []
    for line_number, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = _parse_int_pair(line, line_number)
            header_line = line_number
            continue
        u, v = _parse_int_pair(line, line_number)
        n = header[0]
        if u == v:
            raise GraphParseError(line_number, f"self-loop on vertex {u}")
        if u >= n or v >= n:
            raise GraphParseError(line_number, f"vertex index out of range 0..{n - 1}")
        edges.append((min(u, v), max(u, v)))

    if header is None:
        raise GraphParseError(1, "missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise GraphParseError(header_line, f"header announces {m} edges, found {len(edges)}")

    graph = Graph.from_edges(range(n), edges)
    logger.debug(f"Loaded graph with n={graph.n}, m={graph.m}")
    return graph


def load_file(path: Union[str, Path]) -> Graph:
    """Read and parse a graph file."""
    return load(Path(path).read_text(encoding="ascii"))


def serialize(g: Graph) -> Tuple[str, List[VertexId]]:
    """
    Write g in the graph file format after compacting ids to 0..n-1.

    Returns:
        Tuple of (file text, compaction map) where map[new_index] is the
        original vertex id
    """
    mapping = list(g.vertices)
    index = {v: i for i, v in enumerate(mapping)}
    edges = sorted((index[u], index[v]) for u, v in g.edges())
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n", mapping


def serialize_map(mapping: List[VertexId]) -> str:
    """Compaction map as "new-index original-id" lines."""
    return "".join(f"{i} {v}\n" for i, v in enumerate(mapping))


def induced_subgraph(g: Graph, s: Iterable[VertexId]) -> Graph:
    return g.induced_subgraph(s)


def delete_vertices(g: Graph, s: Iterable[VertexId]) -> Graph:
    return g.delete_vertices(s)


def bfs_distances(g: Graph, source: VertexId, limit: Optional[int] = None) -> Dict[VertexId, int]:
    """Hop distances from source, optionally cut off after `limit` hops."""
    if source not in g:
        raise DomainError(f"vertex {source} is not in the graph")
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if limit is not None and dist[u] >= limit:
            continue
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: VertexId, v: VertexId) -> Union[int, float]:
    """BFS shortest-path length; math.inf when u and v are disconnected."""
    if v not in g:
        raise DomainError(f"vertex {v} is not in the graph")
    return bfs_distances(g, u).get(v, INFINITY)


def connected_components(g: Graph) -> List[List[VertexId]]:
    """Components as sorted vertex lists, ordered by smallest id."""
    seen: set = set()
    components = []
    for v in g.vertices:
        if v in seen:
            continue
        component = sorted(bfs_distances(g, v))
        seen.update(component)
        components.append(component)
    return components
