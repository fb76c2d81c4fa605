"""
Modulator - the 6-approximate deletion set M the reduction rules work against.

Phase 1 greedily deletes vertex-disjoint claws, nets, tents, C4s and C5s.
What is left has only long holes, and phase 2 hits them optimally. The
modulator remembers which phase put every member in, so it can be repaired
after a reduction rule instead of being recomputed.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Collection, Dict, FrozenSet, List, Optional, Set, Tuple

import networkx as nx

from ..errors import DomainError, InternalLogicError
from ..fis_detect import ForbiddenSubgraph, find_hole, find_small_fis, validate_certificate
from ..graph_core import Graph, VertexId, connected_components
from ..recognition import is_unit_interval

logger = logging.getLogger(__name__)

# X \ {v} has at most five vertices, so a sixth disjoint hit is the last one possible
MAX_REPAIR_ROUNDS = 6


class Phase(Enum):
    PHASE1 = "phase1"
    PHASE2 = "phase2"


@dataclass(frozen=True)
class Provenance:
    """Why a vertex is in the modulator."""
    phase: Phase
    obstruction: Optional[int] = None

    def label(self) -> str:
        if self.phase is Phase.PHASE1:
            return f"phase1:{self.obstruction}"
        return "phase2"


@dataclass(frozen=True)
class Modulator:
    """
    Deletion set M with provenance.

    Attributes:
        obstructions: Vertex-disjoint small forbidden subgraphs from phase 1;
            the obstruction id of a phase-1 member is its index here
        phase2: Optimal hole hitting set of G minus the phase-1 vertices
    """
    obstructions: Tuple[ForbiddenSubgraph, ...] = ()
    phase2: FrozenSet[VertexId] = field(default_factory=frozenset)

    @property
    def phase1_members(self) -> FrozenSet[VertexId]:
        return frozenset(v for f in self.obstructions for v in f.vertices)

    @property
    def members(self) -> FrozenSet[VertexId]:
        return self.phase1_members | self.phase2

    def provenance(self) -> Dict[VertexId, Provenance]:
        result = {v: Provenance(Phase.PHASE2) for v in self.phase2}
        for idx, f in enumerate(self.obstructions):
            for v in f.vertices:
                result[v] = Provenance(Phase.PHASE1, idx)
        return result

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def to_dict(self) -> Dict[str, object]:
        return {
            "members": sorted(self.members),
            "provenance": {str(v): p.label() for v, p in sorted(self.provenance().items())},
            "obstructions": [f.to_dict() for f in self.obstructions],
        }


def _extend_phase1(
    h: Graph,
    obstructions: List[ForbiddenSubgraph],
    anchors: Optional[Collection[VertexId]] = None,
    max_rounds: Optional[int] = None,
) -> Graph:
    """
    Delete small forbidden subgraphs from h until none is left, appending each to obstructions.

    With anchors, only occurrences meeting the anchors are searched and more
    than max_rounds of them is an internal error.
    """
    anchor_set = set(anchors) if anchors is not None else None
    rounds = 0
    while True:
        found = find_small_fis(h, anchors=anchor_set)
        if found is None:
            return h
        rounds += 1
        if max_rounds is not None and rounds > max_rounds:
            raise InternalLogicError(
                f"more than {max_rounds} disjoint obstructions through {sorted(anchor_set or ())}"
            )
        logger.debug(f"Phase 1 deletes {found.kind.value} {found.vertices}")
        obstructions.append(found)
        h = h.delete_vertices(found.vertices)
        if anchor_set is not None:
            anchor_set.difference_update(found.vertices)


def _hit_holes(h: Graph, budget: int) -> Optional[Set[VertexId]]:
    """Hitting set of all holes in h with at most `budget` vertices, branching on a shortest hole."""
    hole = find_hole(h)
    if hole is None:
        return set()
    if budget == 0:
        return None
    for v in hole.vertices:
        rest = _hit_holes(h.delete_vertices([v]), budget - 1)
        if rest is not None:
            rest.add(v)
            return rest
    return None


def phase2_exact_hole_hitting(g: Graph) -> FrozenSet[VertexId]:
    """
    Minimum vertex set whose deletion makes g chordal.

    Each connected component is solved on its own by iterative deepening
    on the deletion size.

    Raises:
        DomainError: g still contains a claw, net, tent, C4 or C5
    """
    leftover = find_small_fis(g)
    if leftover is not None:
        raise DomainError(
            f"phase 2 needs a graph free of small obstructions, found {leftover.kind.value} {list(leftover.vertices)}"
        )

    solution: Set[VertexId] = set()
    for component in connected_components(g):
        if len(component) < 4:
            continue
        sub = g.induced_subgraph(component)
        if nx.is_chordal(sub.to_networkx()):
            continue
        budget = 1
        while True:
            hit = _hit_holes(sub, budget)
            if hit is not None:
                solution.update(hit)
                break
            budget += 1
    if solution:
        logger.debug(f"Phase 2 hits holes with {sorted(solution)}")
    return frozenset(solution)


def _with_phase2(g: Graph, obstructions: List[ForbiddenSubgraph]) -> Modulator:
    phase1 = {v for f in obstructions for v in f.vertices}
    h = g.delete_vertices(phase1)
    # phase 2 needs h free of small obstructions
    h = _extend_phase1(h, obstructions)
    return Modulator(tuple(obstructions), phase2_exact_hole_hitting(h))


def approximate(g: Graph) -> Modulator:
    """
    Compute a modulator of size at most 6 * opt(g).

    Returns:
        Modulator whose deletion leaves a unit interval graph
    """
    obstructions: List[ForbiddenSubgraph] = []
    h = _extend_phase1(g, obstructions)
    modulator = Modulator(tuple(obstructions), phase2_exact_hole_hitting(h))
    logger.info(
        f"Modulator: {len(modulator)} vertices "
        f"({len(obstructions)} obstructions, {len(modulator.phase2)} phase-2)"
    )
    return modulator


def repair_after_vertex_deletion(g: Graph, m: Modulator, v: VertexId) -> Modulator:
    """
    Repair m after its member v has been deleted; g is the graph without v.

    A phase-2 member only forces phase 2 to be redone. A phase-1 member
    dissolves its obstruction X: the other phase-1 obstructions stay, and
    since every new small obstruction has to pass through X minus v, only
    those are searched for before phase 2 is redone.

    Raises:
        DomainError: v is not a member of m
    """
    provenance = m.provenance()
    if v not in provenance:
        raise DomainError(f"vertex {v} is not in the modulator")
    if v in g:
        raise DomainError(f"vertex {v} must be deleted before repairing")

    origin = provenance[v]
    if origin.phase is Phase.PHASE2:
        return _with_phase2(g, list(m.obstructions))

    dissolved = m.obstructions[origin.obstruction]
    kept = [f for idx, f in enumerate(m.obstructions) if idx != origin.obstruction]
    h = g.delete_vertices({u for f in kept for u in f.vertices})
    anchors = set(dissolved.vertices) - {v}
    _extend_phase1(h, kept, anchors=anchors, max_rounds=MAX_REPAIR_ROUNDS)
    logger.debug(f"Dissolved {dissolved.kind.value} {dissolved.vertices}, {len(kept)} obstructions remain")
    return _with_phase2(g, kept)


def repair_after_contraction(g: Graph, m: Modulator) -> Modulator:
    """Keep phase 1 and redo phase 2 on the contracted graph g."""
    dead = [v for v in m.members if v not in g]
    if dead:
        raise DomainError(f"contraction removed modulator vertices {sorted(dead)}")
    return _with_phase2(g, list(m.obstructions))


def validate_modulator(g: Graph, m: Modulator) -> bool:
    """Disjoint, still-induced obstructions, and G - M is a unit interval graph."""
    seen: Set[VertexId] = set()
    for f in m.obstructions:
        if seen.intersection(f.vertices) or not validate_certificate(g, f):
            return False
        seen.update(f.vertices)
    if seen & m.phase2:
        return False
    if any(v not in g for v in m.phase2):
        return False
    return is_unit_interval(g.delete_vertices(m.members))
