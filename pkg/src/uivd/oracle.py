"""
Exact UIVD solver used as ground truth by the verifier and the tests.

Branches on the vertices of a forbidden induced subgraph: any solution must
delete at least one of them. Not part of the kernelization path.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Optional, Tuple

from .fis_detect import find_any_fis
from .graph_core import Graph, Instance, VertexId
from .recognition import is_unit_interval

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Solution:
    """Vertices whose deletion leaves a unit interval graph."""
    deleted: FrozenSet[VertexId]

    def __len__(self) -> int:
        return len(self.deleted)

    def to_dict(self) -> Dict[str, object]:
        return {"deleted": sorted(self.deleted), "size": len(self.deleted)}


def _branch(g: Graph, budget: int) -> Optional[Tuple[VertexId, ...]]:
    obstruction = find_any_fis(g)
    if obstruction is None:
        return ()
    if budget == 0:
        return None
    for v in obstruction.vertices:
        rest = _branch(g.delete_vertices([v]), budget - 1)
        if rest is not None:
            return (v,) + rest
    return None


def oracle_solve(inst: Instance) -> Optional[Solution]:
    """A solution with at most k deletions, or None when there is none."""
    found = _branch(inst.graph, inst.k)
    if found is None:
        return None
    return Solution(frozenset(found))


def oracle_opt(g: Graph) -> int:
    """Size of a minimum solution, by iterative deepening."""
    budget = 0
    while _branch(g, budget) is None:
        budget += 1
    logger.debug(f"opt = {budget} for n={g.n}")
    return budget


def oracle_solve_exhaustive(inst: Instance) -> Optional[Solution]:
    """Cross-check mode: try every vertex subset of size 0..k, smallest first."""
    g = inst.graph
    for size in range(min(inst.k, g.n) + 1):
        for subset in combinations(g.vertices, size):
            if is_unit_interval(g.delete_vertices(subset)):
                return Solution(frozenset(subset))
    return None
