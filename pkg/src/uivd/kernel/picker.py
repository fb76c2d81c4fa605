"""
Vertex picking on a reduced state and kernel assembly.

From each "type" of vertex we keep the first and/or last k + 1 members in
the proper interval ordering, so any unpicked vertex of a type is flanked
by k + 1 picked vertices of the same type on the relevant side. The
kernel is G induced on the picked vertices plus M, with the same k.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Set, Tuple

from ..graph_core import Graph, Instance, VertexId
from .reduction import ReductionState

logger = logging.getLogger(__name__)

Picks = Tuple[VertexId, ...]


class Pattern(Enum):
    """Adjacency of a block vertex to an ordered pair (x1, x2) of modulator vertices."""
    BOTH = "x1,x2"
    ONLY_FIRST = "x1,~x2"
    ONLY_SECOND = "~x1,x2"
    NEITHER = "~x1,~x2"


def _first(seq: Sequence[VertexId], k: int) -> List[VertexId]:
    return list(seq[: k + 1])


def _last(seq: Sequence[VertexId], k: int) -> List[VertexId]:
    return list(seq[-(k + 1):]) if seq else []


def _ends(seq: Sequence[VertexId], k: int) -> List[VertexId]:
    """First and last k + 1 of seq, the whole of seq when that is all of it."""
    if len(seq) <= 2 * (k + 1):
        return list(seq)
    return _first(seq, k) + _last(seq, k)


def _in_order(block: Sequence[VertexId], chosen: Iterable[VertexId]) -> Picks:
    wanted = set(chosen)
    return tuple(v for v in block if v in wanted)


@dataclass
class PickReport:
    """
    Every picked set, keyed the way the categories are indexed.

    Block indices are 0-based; each set is listed in ordering order.
    """
    k0: Dict[int, Picks] = field(default_factory=dict)
    k1: Dict[Tuple[int, VertexId, VertexId, Pattern], Picks] = field(default_factory=dict)
    k1x: Dict[Tuple[int, VertexId], Picks] = field(default_factory=dict)
    k1x_bar: Dict[Tuple[int, VertexId], Picks] = field(default_factory=dict)
    k2: Dict[Tuple[int, VertexId, VertexId], Picks] = field(default_factory=dict)
    k3: Dict[Tuple[int, VertexId, VertexId], Picks] = field(default_factory=dict)
    k4: Dict[Tuple[int, VertexId, VertexId], Picks] = field(default_factory=dict)
    v0: Picks = ()

    @property
    def union(self) -> FrozenSet[VertexId]:
        picked: Set[VertexId] = set(self.v0)
        for family in (self.k0, self.k1, self.k2, self.k3, self.k4):
            for vs in family.values():
                picked.update(vs)
        return frozenset(picked)

    def per_block_union(self) -> Dict[int, FrozenSet[VertexId]]:
        blocks: Dict[int, Set[VertexId]] = {}
        for family in (self.k0, self.k1, self.k2, self.k3, self.k4):
            for key, vs in family.items():
                idx = key if isinstance(key, int) else key[0]
                blocks.setdefault(idx, set()).update(vs)
        return {idx: frozenset(vs) for idx, vs in sorted(blocks.items())}

    def to_dict(self) -> Dict[str, object]:
        def keyed(family):
            rows = []
            for key, vs in family.items():
                parts = key if isinstance(key, tuple) else (key,)
                rows.append({
                    "key": [p.value if isinstance(p, Pattern) else p for p in parts],
                    "vertices": list(vs),
                })
            return rows

        return {
            "K0": keyed(self.k0),
            "K1": keyed(self.k1),
            "K1x": keyed(self.k1x),
            "K1x_bar": keyed(self.k1x_bar),
            "K2": keyed(self.k2),
            "K3": keyed(self.k3),
            "K4": keyed(self.k4),
            "V0": list(self.v0),
            "union": sorted(self.union),
        }


def _modulator_order(s: ReductionState) -> List[VertexId]:
    return sorted(s.modulator.members)


def pick_k0(s: ReductionState) -> Dict[int, Picks]:
    """Ends of each block, of its M-free part, and of each x's neighbourhood in it."""
    g, k = s.graph, s.k
    members = _modulator_order(s)
    result = {}
    for idx, block in enumerate(s.partition.cliques):
        chosen = set(_ends(block, k))
        free = [v for v in block if not any(g.has_edge(v, x) for x in members)]
        chosen.update(_ends(free, k))
        for x in members:
            chosen.update(_ends([v for v in block if g.has_edge(v, x)], k))
        result[idx] = _in_order(block, chosen)
    return result


def _pattern_classes(g: Graph, block: Sequence[VertexId], x1: VertexId, x2: VertexId) -> Dict[Pattern, List[VertexId]]:
    classes: Dict[Pattern, List[VertexId]] = {p: [] for p in Pattern}
    for v in block:
        a, b = g.has_edge(v, x1), g.has_edge(v, x2)
        if a and b:
            classes[Pattern.BOTH].append(v)
        elif a:
            classes[Pattern.ONLY_FIRST].append(v)
        elif b:
            classes[Pattern.ONLY_SECOND].append(v)
        else:
            classes[Pattern.NEITHER].append(v)
    return classes


def pick_k1(s: ReductionState) -> Dict[Tuple[int, VertexId, VertexId, Pattern], Picks]:
    """Ends of each of the four adjacency patterns, for every pair x1 < x2 of M."""
    result = {}
    for idx, block in enumerate(s.partition.cliques):
        for x1, x2 in combinations(_modulator_order(s), 2):
            for pattern, members in _pattern_classes(s.graph, block, x1, x2).items():
                result[(idx, x1, x2, pattern)] = tuple(_ends(members, s.k))
    return result


def _single_vertex_unions(
    s: ReductionState, k1: Dict[Tuple[int, VertexId, VertexId, Pattern], Picks], adjacent: bool
) -> Dict[Tuple[int, VertexId], Picks]:
    """
    Ends of the union of all K1 classes adjacent (or nonadjacent) to x.

    For adjacent=True this is K1(x): the union over y != x of K1(x, y) and K1(x, ~y).
    """
    members = _modulator_order(s)
    result = {}
    for idx, block in enumerate(s.partition.cliques):
        for x in members:
            pooled: Set[VertexId] = set()
            for (b, x1, x2, pattern), vs in k1.items():
                if b != idx or x not in (x1, x2):
                    continue
                sees_x = pattern is Pattern.BOTH or pattern is (Pattern.ONLY_FIRST if x == x1 else Pattern.ONLY_SECOND)
                if sees_x == adjacent:
                    pooled.update(vs)
            result[(idx, x)] = tuple(_ends(_in_order(block, pooled), s.k))
    return result


def _next_door(t: int, idx: int) -> Iterator[Tuple[int, bool]]:
    """(neighbouring block, is-left) for the blocks beside idx."""
    if idx > 0:
        yield idx - 1, True
    if idx < t - 1:
        yield idx + 1, False


def pick_k2(s: ReductionState) -> Dict[Tuple[int, VertexId, VertexId], Picks]:
    """
    Common neighbours of x and y in K[i], for y a non-neighbour of x next door.

    From the left: last k + 1 non-neighbours y in K[i-1], last k + 1 common
    neighbours in K[i]. From the right: first and first.
    """
    g, k = s.graph, s.k
    cliques = s.partition.cliques
    result = {}
    for idx, block in enumerate(cliques):
        for other, from_left in _next_door(len(cliques), idx):
            take = _last if from_left else _first
            for x in _modulator_order(s):
                outsiders = [y for y in cliques[other] if not g.has_edge(x, y)]
                for y in take(outsiders, k):
                    common = [v for v in block if g.has_edge(v, x) and g.has_edge(v, y)]
                    result[(idx, x, y)] = tuple(take(common, k))
    return result


def pick_k3(s: ReductionState) -> Dict[Tuple[int, VertexId, VertexId], Picks]:
    """
    Neighbours of x in K[i] that miss y, for y a neighbour of x next door.

    From the left: first k + 1 x-neighbours y in K[i-1], first k + 1 picks.
    From the right: last and last.
    """
    g, k = s.graph, s.k
    cliques = s.partition.cliques
    result = {}
    for idx, block in enumerate(cliques):
        for other, from_left in _next_door(len(cliques), idx):
            take = _first if from_left else _last
            for x in _modulator_order(s):
                insiders = [y for y in cliques[other] if g.has_edge(x, y)]
                for y in take(insiders, k):
                    missing = [v for v in block if g.has_edge(v, x) and not g.has_edge(v, y)]
                    result[(idx, x, y)] = tuple(take(missing, k))
    return result


def pick_k4(s: ReductionState) -> Dict[Tuple[int, VertexId, VertexId], Picks]:
    """
    Neighbours of y in K[i] that miss x, for y a neighbour of x next door.

    From the left: last k + 1 x-neighbours y in K[i-1], last k + 1 picks.
    From the right: first and first.
    """
    g, k = s.graph, s.k
    cliques = s.partition.cliques
    result = {}
    for idx, block in enumerate(cliques):
        for other, from_left in _next_door(len(cliques), idx):
            take = _last if from_left else _first
            for x in _modulator_order(s):
                insiders = [y for y in cliques[other] if g.has_edge(x, y)]
                for y in take(insiders, k):
                    missing = [v for v in block if g.has_edge(v, y) and not g.has_edge(v, x)]
                    result[(idx, x, y)] = tuple(take(missing, k))
    return result


def pick_v0(s: ReductionState) -> Picks:
    """
    Witnesses for triples of M: k + 1 common neighbours of every independent
    triple, and k + 1 vertices seeing only the centre of every induced P3.
    Smallest ids are taken.
    """
    g, k = s.graph, s.k
    members = _modulator_order(s)
    outside = [v for v in g.vertices if v not in s.modulator.members]
    chosen: Set[VertexId] = set()
    for triple in combinations(members, 3):
        inner_edges = [(a, b) for a, b in combinations(triple, 2) if g.has_edge(a, b)]
        if not inner_edges:
            common = [v for v in outside if all(g.has_edge(v, x) for x in triple)]
            chosen.update(common[: k + 1])
        elif len(inner_edges) == 2:
            center = next(x for x in triple if all(x in e for e in inner_edges))
            ends = [x for x in triple if x != center]
            only_center = [
                v for v in outside if g.has_edge(v, center) and not any(g.has_edge(v, x) for x in ends)
            ]
            chosen.update(only_center[: k + 1])
    return tuple(sorted(chosen))


def pick_all(s: ReductionState) -> PickReport:
    k1 = pick_k1(s)
    report = PickReport(
        k0=pick_k0(s),
        k1=k1,
        k1x=_single_vertex_unions(s, k1, adjacent=True),
        k1x_bar=_single_vertex_unions(s, k1, adjacent=False),
        k2=pick_k2(s),
        k3=pick_k3(s),
        k4=pick_k4(s),
        v0=pick_v0(s),
    )
    logger.debug(f"Picked {len(report.union)} of {s.graph.n - len(s.modulator)} non-modulator vertices")
    return report


def per_block_bound(modulator_size: int, k: int) -> int:
    """Most vertices the categories can pick from a single block."""
    return 2 * (k + 1) * ((2 + modulator_size) + 4 * comb(modulator_size, 2) + 3 * modulator_size * (k + 1))


def assemble_kernel(s: ReductionState, r: PickReport) -> Instance:
    """G induced on the picked vertices together with M; k is unchanged."""
    kernel = s.graph.induced_subgraph(r.union | s.modulator.members)
    logger.info(f"Kernel has {kernel.n} vertices and {kernel.m} edges (k={s.k})")
    return Instance(kernel, s.k)
