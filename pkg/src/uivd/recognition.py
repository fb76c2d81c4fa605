"""
Certifying unit interval recognition, unit interval models, and the clique
partition built on top of a model.

Yes-side certificates are a proper interval ordering together with a unit
interval model using exact rationals; no-side certificates come from
fis_detect.
"""

import logging
import math
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import CertificateError, DomainError, InternalLogicError
from .fis_detect import ForbiddenSubgraph, find_any_fis
from .graph_core import Edge, Graph, VertexId, connected_components

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProperIntervalOrdering:
    """Vertex ordering with the umbrella property."""
    order: Tuple[VertexId, ...]

    @cached_property
    def position(self) -> Dict[VertexId, int]:
        return {v: i for i, v in enumerate(self.order)}

    def reversed(self) -> "ProperIntervalOrdering":
        return ProperIntervalOrdering(tuple(reversed(self.order)))

    def __len__(self) -> int:
        return len(self.order)


@dataclass(frozen=True)
class UnitIntervalModel:
    """Closed unit intervals [lp, rp] with exact rational endpoints."""
    intervals: Mapping[VertexId, Tuple[Fraction, Fraction]]

    def lp(self, v: VertexId) -> Fraction:
        return self.intervals[v][0]

    def rp(self, v: VertexId) -> Fraction:
        return self.intervals[v][1]

    def ordering(self) -> ProperIntervalOrdering:
        return ProperIntervalOrdering(tuple(sorted(self.intervals, key=self.lp)))


@dataclass(frozen=True)
class UnitIntervalCertificate:
    """Yes-side output of recognize."""
    ordering: ProperIntervalOrdering
    model: UnitIntervalModel


@dataclass(frozen=True)
class CliquePartition:
    """Ordered cliques K_0..K_{t-1}, consecutive blocks of the ordering."""
    cliques: Tuple[Tuple[VertexId, ...], ...]

    @cached_property
    def block_of(self) -> Dict[VertexId, int]:
        return {v: i for i, block in enumerate(self.cliques) for v in block}

    def index_of(self, v: VertexId) -> int:
        try:
            return self.block_of[v]
        except KeyError:
            raise DomainError(f"vertex {v} is not in the partition")

    def __len__(self) -> int:
        return len(self.cliques)


Recognition = Union[UnitIntervalCertificate, ForbiddenSubgraph]


def _lex_bfs(g: Graph, initial: Sequence[VertexId]) -> List[VertexId]:
    """
    LexBFS by partition refinement.

    Ties go to the vertex that comes first in `initial`; passing a previous
    sweep reversed gives LexBFS+.
    """
    classes: List[List[VertexId]] = [list(initial)]
    order: List[VertexId] = []
    while classes:
        head = classes[0]
        pivot = head.pop(0)
        if not head:
            classes.pop(0)
        order.append(pivot)
        nbrs = g.neighbor_set(pivot)
        refined = []
        for cls in classes:
            inside = [v for v in cls if v in nbrs]
            outside = [v for v in cls if v not in nbrs]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        classes = refined
    return order


def candidate_ordering(g: Graph) -> ProperIntervalOrdering:
    """Three LexBFS sweeps per component; a proper interval ordering whenever one exists."""
    order: List[VertexId] = []
    for component in connected_components(g):
        sweep = _lex_bfs(g, component)
        for _ in range(2):
            sweep = _lex_bfs(g, sweep[::-1])
        order.extend(sweep)
    return ProperIntervalOrdering(tuple(order))


def find_umbrella_violation(
    g: Graph, ordering: ProperIntervalOrdering
) -> Optional[Tuple[VertexId, VertexId, VertexId]]:
    """
    Return (v_i, v_a, v_j) with i < a < j, v_i v_j an edge and {v_i..v_j} not a clique.

    The umbrella property is equivalent to: the later neighbours of each
    vertex are the next few vertices, and their reach never decreases.
    """
    order = ordering.order
    if len(order) != g.n or set(order) != set(g.vertices):
        raise DomainError("ordering is not a permutation of the graph's vertices")
    pos = ordering.position

    reach_from: Optional[int] = None
    reach = -1
    for i, v in enumerate(order):
        later = sorted(pos[u] for u in g.neighbor_set(v) if pos[u] > i)
        last = later[-1] if later else i
        if len(later) != last - i:
            present = set(later)
            gap = next(a for a in range(i + 1, last) if a not in present)
            return v, order[gap], order[last]
        if reach_from is not None and i < reach and last < reach:
            return order[reach_from], v, order[reach]
        if last > reach:
            reach, reach_from = last, i
    return None


def _simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Smallest-denominator rational strictly inside (lo, hi)."""
    base = math.floor(lo)
    if base + 1 < hi:
        return Fraction(base + 1)
    if lo == base:
        return base + Fraction(1, math.floor(1 / (hi - base)) + 1)
    return base + 1 / _simplest_between(1 / (hi - base), 1 / (lo - base))


def ordering_to_unit_model(g: Graph, ordering: ProperIntervalOrdering) -> UnitIntervalModel:
    """
    Build a unit interval model whose left-endpoint order is `ordering`.

    Each v_j gets its left endpoint strictly between the right endpoint of
    the last earlier non-neighbour and the right endpoint of the first
    earlier neighbour. Strict windows keep all 2n endpoints distinct.

    Raises:
        CertificateError: the ordering violates the umbrella property
    """
    violation = find_umbrella_violation(g, ordering)
    if violation is not None:
        raise CertificateError(violation)

    pos = ordering.position
    lefts: List[Fraction] = []
    for j, v in enumerate(ordering.order):
        earlier = [pos[u] for u in g.neighbor_set(v) if pos[u] < j]
        if j == 0:
            left = Fraction(0)
        elif not earlier:
            left = lefts[j - 1] + 2
        else:
            first = min(earlier)
            lo = lefts[j - 1]
            if first > 0:
                lo = max(lo, lefts[first - 1] + 1)
            hi = lefts[first] + 1
            if not lo < hi:
                raise InternalLogicError(f"empty placement window for vertex {v}")
            left = _simplest_between(lo, hi)
        lefts.append(left)

    return UnitIntervalModel({v: (lefts[j], lefts[j] + 1) for j, v in enumerate(ordering.order)})


def validate_model(g: Graph, model: UnitIntervalModel) -> bool:
    """Unit lengths, pairwise distinct endpoints, and intersection graph equal to g."""
    if set(model.intervals) != set(g.vertices):
        return False
    endpoints = []
    for lp, rp in model.intervals.values():
        if rp - lp != 1:
            return False
        endpoints.extend((lp, rp))
    if len(set(endpoints)) != len(endpoints):
        return False

    order = model.ordering().order
    lefts = [model.lp(v) for v in order]
    for i, v in enumerate(order):
        stop = bisect_left(lefts, model.rp(v))
        overlapping = set(order[i + 1:stop])
        later_nbrs = {u for u in g.neighbor_set(v) if model.lp(u) > model.lp(v)}
        if overlapping != later_nbrs:
            return False
    return True


def recognize(g: Graph) -> Recognition:
    """
    Decide whether g is a unit interval graph, with a certificate either way.

    Returns:
        UnitIntervalCertificate (ordering + model) or ForbiddenSubgraph
    """
    ordering = candidate_ordering(g)
    if find_umbrella_violation(g, ordering) is None:
        return UnitIntervalCertificate(ordering, ordering_to_unit_model(g, ordering))

    obstruction = find_any_fis(g)
    if obstruction is None:
        raise InternalLogicError("sweep ordering failed on a forbidden-subgraph-free graph")
    logger.debug(f"Not unit interval: {obstruction.kind.value} {obstruction.vertices}")
    return obstruction


def is_unit_interval(g: Graph) -> bool:
    return isinstance(recognize(g), UnitIntervalCertificate)


def greedy_clique_partition(g: Graph, model: UnitIntervalModel) -> CliquePartition:
    """
    Sweep the model left to right: the leftmost unassigned interval and every
    later interval containing its right endpoint form the next clique.
    """
    if set(model.intervals) != set(g.vertices):
        raise DomainError("model does not cover the graph")
    order = model.ordering().order
    cliques = []
    start = 0
    while start < len(order):
        cut = model.rp(order[start])
        stop = start + 1
        while stop < len(order) and model.lp(order[stop]) < cut:
            stop += 1
        cliques.append(tuple(order[start:stop]))
        start = stop
    return CliquePartition(tuple(cliques))


def validate_partition(g: Graph, p: CliquePartition) -> bool:
    """Blocks are cliques covering g, and neighbours live in the same or an adjacent block."""
    covered = [v for block in p.cliques for v in block]
    if len(covered) != len(set(covered)) or set(covered) != set(g.vertices):
        return False
    for block in p.cliques:
        members = set(block)
        if any(len(g.neighbor_set(v) & members) != len(members) - 1 for v in block):
            return False
    block_of = p.block_of
    return all(
        abs(block_of[u] - block_of[v]) <= 1 for u, v in g.edges()
    )


def contraction_biclique(g: Graph, p: CliquePartition, i: int) -> List[Edge]:
    """New edges created by contracting block i: its left and right neighbourhoods joined."""
    if not 0 < i < len(p) - 1:
        raise DomainError(f"only interior blocks can be contracted, got {i} of {len(p)}")
    block = set(p.cliques[i])
    left = [u for u in p.cliques[i - 1] if g.neighbor_set(u) & block]
    right = [w for w in p.cliques[i + 1] if g.neighbor_set(w) & block]
    return [(min(u, w), max(u, w)) for u, w in product(left, right) if not g.has_edge(u, w)]


def contract_clique(g: Graph, p: CliquePartition, i: int) -> Tuple[Graph, CliquePartition]:
    """
    Delete block i and join its neighbours in blocks i-1 and i+1 completely.

    Raises:
        DomainError: i is the first or the last block
    """
    added = contraction_biclique(g, p, i)
    contracted = g.delete_vertices(p.cliques[i]).add_edges(added)
    remaining = CliquePartition(p.cliques[:i] + p.cliques[i + 1:])
    logger.debug(f"Contracted block {i} ({len(p.cliques[i])} vertices, {len(added)} new edges)")
    return contracted, remaining


def clique_distance_lower_bound(p: CliquePartition, u: VertexId, v: VertexId) -> int:
    """Block gap between u and v; a lower bound on their distance."""
    return abs(p.index_of(v) - p.index_of(u))
