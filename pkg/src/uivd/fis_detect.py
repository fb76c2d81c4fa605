"""
Forbidden induced subgraphs of unit interval graphs.

A graph is a unit interval graph iff it has no induced claw, net, tent or
hole. The small patterns are found by direct enumeration anchored at each
vertex; holes by a shortest-path search that is skipped entirely for
chordal graphs.
"""

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Callable, Collection, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import InternalLogicError
from .graph_core import Graph, VertexId, bfs_distances

logger = logging.getLogger(__name__)


class FisKind(Enum):
    """Kind of a forbidden induced subgraph certificate."""
    CLAW = "claw"
    NET = "net"
    TENT = "tent"
    HOLE = "hole"


class SmallKind(Enum):
    """Small patterns searched by the approximation; scan order is declaration order."""
    CLAW = "claw"
    NET = "net"
    TENT = "tent"
    C4 = "c4"
    C5 = "c5"


ALL_SMALL_KINDS: Tuple[SmallKind, ...] = tuple(SmallKind)


@dataclass(frozen=True)
class ForbiddenSubgraph:
    """
    Certificate that a graph is not a unit interval graph.

    Vertex order: Claw = [center, leaves]; Net = [triangle a<b<c, pendant(a),
    pendant(b), pendant(c)]; Tent = [inner triangle a<b<c, then the outer
    vertices opposite a, b, c]; Hole = cyclic order.
    """
    kind: FisKind
    vertices: Tuple[VertexId, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def to_dict(self) -> Dict[str, object]:
        return {"kind": self.kind.value, "vertices": list(self.vertices)}


# Enumerators, each yields certificates in a fixed scan order


def iter_claws(g: Graph) -> Iterator[ForbiddenSubgraph]:
    for center in g.vertices:
        for a, b, c in combinations(g.neighbors(center), 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                yield ForbiddenSubgraph(FisKind.CLAW, (center, a, b, c))


def _iter_triangles(g: Graph) -> Iterator[Tuple[VertexId, VertexId, VertexId]]:
    for a in g.vertices:
        higher = [b for b in g.neighbors(a) if b > a]
        for b in higher:
            nb = g.neighbor_set(b)
            for c in higher:
                if c > b and c in nb:
                    yield a, b, c


def iter_nets(g: Graph) -> Iterator[ForbiddenSubgraph]:
    for a, b, c in _iter_triangles(g):
        na, nb, nc = g.neighbor_set(a), g.neighbor_set(b), g.neighbor_set(c)
        triangle = {a, b, c}
        pendants_a = [p for p in g.neighbors(a) if p not in triangle and p not in nb and p not in nc]
        if not pendants_a:
            continue
        pendants_b = [p for p in g.neighbors(b) if p not in triangle and p not in na and p not in nc]
        if not pendants_b:
            continue
        pendants_c = [p for p in g.neighbors(c) if p not in triangle and p not in na and p not in nb]
        for pa in pendants_a:
            npa = g.neighbor_set(pa)
            for pb in pendants_b:
                if pb in npa:
                    continue
                npb = g.neighbor_set(pb)
                for pc in pendants_c:
                    if pc not in npa and pc not in npb:
                        yield ForbiddenSubgraph(FisKind.NET, (a, b, c, pa, pb, pc))


def iter_tents(g: Graph) -> Iterator[ForbiddenSubgraph]:
    for a, b, c in _iter_triangles(g):
        na, nb, nc = g.neighbor_set(a), g.neighbor_set(b), g.neighbor_set(c)
        # opposite vertex of a sees b and c but not a, and so on
        opp_a = [s for s in g.neighbors(b) if s in nc and s not in na and s != a]
        if not opp_a:
            continue
        opp_b = [s for s in g.neighbors(a) if s in nc and s not in nb and s != b]
        if not opp_b:
            continue
        opp_c = [s for s in g.neighbors(a) if s in nb and s not in nc and s != c]
        for sa in opp_a:
            nsa = g.neighbor_set(sa)
            for sb in opp_b:
                if sb in nsa:
                    continue
                nsb = g.neighbor_set(sb)
                for sc in opp_c:
                    if sc not in nsa and sc not in nsb:
                        yield ForbiddenSubgraph(FisKind.TENT, (a, b, c, sa, sb, sc))


def iter_c4(g: Graph) -> Iterator[ForbiddenSubgraph]:
    """Induced 4-cycles [a, b, c, d] with a the smallest vertex and b < d."""
    for a in g.vertices:
        na = g.neighbor_set(a)
        higher = [v for v in g.neighbors(a) if v > a]
        for b, d in combinations(higher, 2):
            if g.has_edge(b, d):
                continue
            nd = g.neighbor_set(d)
            for c in g.neighbors(b):
                if c > a and c in nd and c not in na:
                    yield ForbiddenSubgraph(FisKind.HOLE, (a, b, c, d))


def iter_c5(g: Graph) -> Iterator[ForbiddenSubgraph]:
    """Induced 5-cycles [a, b, c, d, e] with a the smallest vertex and b < e."""
    for a in g.vertices:
        na = g.neighbor_set(a)
        higher = [v for v in g.neighbors(a) if v > a]
        for b, e in combinations(higher, 2):
            if g.has_edge(b, e):
                continue
            nb, ne = g.neighbor_set(b), g.neighbor_set(e)
            for c in g.neighbors(b):
                if c <= a or c in na or c in ne:
                    continue
                nc = g.neighbor_set(c)
                for d in g.neighbors(e):
                    if d > a and d in nc and d not in na and d not in nb:
                        yield ForbiddenSubgraph(FisKind.HOLE, (a, b, c, d, e))


_ENUMERATORS: Dict[SmallKind, Callable[[Graph], Iterator[ForbiddenSubgraph]]] = {
    SmallKind.CLAW: iter_claws,
    SmallKind.NET: iter_nets,
    SmallKind.TENT: iter_tents,
    SmallKind.C4: iter_c4,
    SmallKind.C5: iter_c5,
}


def find_small_fis(
    g: Graph,
    kinds: Iterable[SmallKind] = ALL_SMALL_KINDS,
    anchors: Optional[Collection[VertexId]] = None,
) -> Optional[ForbiddenSubgraph]:
    """
    Find an induced claw, net, tent, C4 or C5.

    Kinds are scanned in the order Claw, Net, Tent, C4, C5 whatever order
    they are passed in.

    Args:
        g: Graph to search
        kinds: Subset of SmallKind to look for
        anchors: If given, only occurrences meeting this vertex set count

    Returns:
        First occurrence in scan order, or None
    """
    wanted = set(kinds)
    search_graph = g
    anchor_set = None
    if anchors is not None:
        anchor_set = frozenset(v for v in anchors if v in g)
        if not anchor_set:
            return None
        # every small pattern has diameter <= 3
        ball: set = set()
        for v in anchor_set:
            ball.update(bfs_distances(g, v, limit=3))
        search_graph = g.induced_subgraph(ball)

    for kind in ALL_SMALL_KINDS:
        if kind not in wanted:
            continue
        for found in _ENUMERATORS[kind](search_graph):
            if anchor_set is None or anchor_set.intersection(found.vertices):
                logger.debug(f"Found {kind.value} {found.vertices}")
                return found
    return None


def _shortest_path_avoiding(
    g: Graph, source: VertexId, target: VertexId, blocked: Collection[VertexId], max_len: int
) -> Optional[List[VertexId]]:
    """Shortest source-target path (as a vertex list) avoiding `blocked`, at most max_len edges."""
    parent = {source: None}
    depth = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if depth[u] >= max_len:
            continue
        for w in g.neighbors(u):
            if w in parent or w in blocked:
                continue
            parent[w] = u
            depth[w] = depth[u] + 1
            if w == target:
                path = [w]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(w)
    return None


def find_hole(g: Graph) -> Optional[ForbiddenSubgraph]:
    """
    Return a shortest hole, or None if g is chordal.

    For every vertex a and nonadjacent pair b < c of its neighbours, a
    shortest b-c path avoiding N[a] (other than b and c) closes an induced
    cycle through a. The minimum over all (a, b, c) is a shortest hole.
    """
    if nx.is_chordal(g.to_networkx()):
        return None

    best: Optional[List[VertexId]] = None
    for a in g.vertices:
        closed = g.neighbor_set(a) | {a}
        for b, c in combinations(g.neighbors(a), 2):
            if g.has_edge(b, c):
                continue
            # a path of L edges gives a hole of L + 2 vertices
            limit = len(best) - 3 if best is not None else g.n
            if limit < 2:
                continue
            blocked = closed - {b, c}
            path = _shortest_path_avoiding(g, b, c, blocked, limit)
            if path is not None and (best is None or len(path) + 1 < len(best)):
                best = [a] + path
                if len(best) == 4:
                    break
        if best is not None and len(best) == 4:
            break

    if best is None:
        raise InternalLogicError("non-chordal graph without a hole")
    logger.debug(f"Shortest hole has length {len(best)}: {best}")
    return ForbiddenSubgraph(FisKind.HOLE, tuple(best))


def find_any_fis(g: Graph) -> Optional[ForbiddenSubgraph]:
    """None iff g is a unit interval graph, otherwise one certificate."""
    found = find_small_fis(g)
    if found is not None:
        return found
    return find_hole(g)


def _is_independent(g: Graph, vs: Sequence[VertexId]) -> bool:
    return not any(g.has_edge(u, v) for u, v in combinations(vs, 2))


def _is_clique(g: Graph, vs: Sequence[VertexId]) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def _sees_exactly(g: Graph, v: VertexId, among: Sequence[VertexId], wanted: Collection[VertexId]) -> bool:
    return all(g.has_edge(v, u) == (u in wanted) for u in among if u != v)


def validate_certificate(g: Graph, f: ForbiddenSubgraph) -> bool:
    """True iff the listed vertices induce the claimed pattern in g in the stated order."""
    vs = f.vertices
    if len(set(vs)) != len(vs) or any(v not in g for v in vs):
        return False

    if f.kind is FisKind.CLAW:
        if len(vs) != 4:
            return False
        center, leaves = vs[0], vs[1:]
        return all(g.has_edge(center, leaf) for leaf in leaves) and _is_independent(g, leaves)

    if f.kind in (FisKind.NET, FisKind.TENT):
        if len(vs) != 6:
            return False
        inner, outer = vs[:3], vs[3:]
        if not _is_clique(g, inner) or not _is_independent(g, outer):
            return False
        for idx, v in enumerate(outer):
            if f.kind is FisKind.NET:
                wanted = {inner[idx]}
            else:
                wanted = set(inner) - {inner[idx]}
            if not _sees_exactly(g, v, inner, wanted):
                return False
        return True

    # hole
    length = len(vs)
    if length < 4:
        return False
    for i in range(length):
        for j in range(i + 1, length):
            consecutive = j == i + 1 or (i == 0 and j == length - 1)
            if g.has_edge(vs[i], vs[j]) != consecutive:
                return False
    return True
