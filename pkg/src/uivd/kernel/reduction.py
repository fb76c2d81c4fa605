"""
Reduction rules and the reduce-to-fixpoint loop.

Every rule works on a ReductionState: the instance, its modulator M, and a
proper interval ordering, unit interval model and clique partition of G - M.
States are rebuilt from scratch after each rule application.
"""

import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple

import networkx as nx
from networkx.algorithms.connectivity import minimum_st_node_cut

from ..errors import BudgetExhausted, DomainError, InternalLogicError
from ..graph_core import Edge, Graph, Instance, VertexId
from ..recognition import (
    CliquePartition,
    ProperIntervalOrdering,
    UnitIntervalCertificate,
    UnitIntervalModel,
    contraction_biclique,
    greedy_clique_partition,
    ordering_to_unit_model,
    recognize,
)
from .modulator import Modulator, approximate, repair_after_contraction, repair_after_vertex_deletion

logger = logging.getLogger(__name__)

# Rule 1 fires at k + STAR_SLACK adjacent blocks
STAR_SLACK = 5
# Rule 2 needs this many blocks with k + 1 neighbours each
HEAVY_BLOCKS = 5
# Rule 3 needs this many consecutive M-free blocks
SMOOTH_RUN = 7
# NO when |M| exceeds this multiple of k
APPROXIMATION_RATIO = 6


@dataclass(frozen=True)
class ReductionState:
    """An instance with its modulator and the interval structure of G - M."""
    instance: Instance
    modulator: Modulator
    ordering: ProperIntervalOrdering
    model: UnitIntervalModel
    partition: CliquePartition

    @property
    def graph(self) -> Graph:
        return self.instance.graph

    @property
    def k(self) -> int:
        return self.instance.k

    @property
    def rest(self) -> Graph:
        """G - M."""
        return self.graph.delete_vertices(self.modulator.members)


def build_state(
    instance: Instance, modulator: Modulator, ordering: Optional[ProperIntervalOrdering] = None
) -> ReductionState:
    """
    Fix ordering, model and clique partition for G - M.

    Args:
        instance: Current instance
        modulator: Modulator valid for instance.graph
        ordering: Proper interval ordering of G - M to use instead of the
            recognized one

    Raises:
        CertificateError: the supplied ordering is not a proper interval ordering
        InternalLogicError: G - M is not a unit interval graph
    """
    rest = instance.graph.delete_vertices(modulator.members)
    if ordering is None:
        result = recognize(rest)
        if not isinstance(result, UnitIntervalCertificate):
            raise InternalLogicError(f"G - M contains a {result.kind.value} {list(result.vertices)}")
        ordering, model = result.ordering, result.model
    else:
        model = ordering_to_unit_model(rest, ordering)
    partition = greedy_clique_partition(rest, model)
    return ReductionState(instance, modulator, ordering, model, partition)


@dataclass(frozen=True)
class AdjacencyProfile:
    """
    How M meets the clique partition.

    Attributes:
        neighbor_counts: per x in M, block index -> number of x's neighbours there
        adjacent_blocks: per x in M, how many blocks x is adjacent to
        heavy_blocks: per x in M, how many blocks hold at least k + 1 of its neighbours
        block_touched: per block, whether any vertex of M is adjacent to it
    """
    neighbor_counts: Dict[VertexId, Dict[int, int]]
    adjacent_blocks: Dict[VertexId, int]
    heavy_blocks: Dict[VertexId, int]
    block_touched: Tuple[bool, ...]


def profile(s: ReductionState) -> AdjacencyProfile:
    """One pass over the adjacency list of every modulator vertex."""
    members = s.modulator.members
    block_of = s.partition.block_of
    touched = [False] * len(s.partition)
    counts: Dict[VertexId, Dict[int, int]] = {}
    for x in sorted(members):
        per_block = Counter(block_of[u] for u in s.graph.neighbors(x) if u not in members)
        for idx in per_block:
            touched[idx] = True
        counts[x] = dict(sorted(per_block.items()))

    return AdjacencyProfile(
        neighbor_counts=counts,
        adjacent_blocks={x: len(c) for x, c in counts.items()},
        heavy_blocks={x: sum(1 for n in c.values() if n >= s.k + 1) for x, c in counts.items()},
        block_touched=tuple(touched),
    )


class Rule(Enum):
    STAR = 1
    HEAVY = 2
    SMOOTH = 3


@dataclass(frozen=True)
class TraceStep:
    """
    One rule application.

    Rules 1 and 2 delete one modulator vertex; rule 3 deletes a block and
    adds the edges listed in added_edges.
    """
    rule: int
    vertices: Tuple[VertexId, ...]
    k_after: int
    added_edges: Tuple[Edge, ...] = ()

    def to_dict(self) -> Dict[str, object]:
        return {
            "rule": self.rule,
            "vertices": list(self.vertices),
            "added_edges": [list(e) for e in self.added_edges],
            "k_after": self.k_after,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "TraceStep":
        return cls(
            rule=int(data["rule"]),
            vertices=tuple(data["vertices"]),
            k_after=int(data["k_after"]),
            added_edges=tuple(tuple(e) for e in data.get("added_edges", [])),
        )


@dataclass
class ReductionTrace:
    steps: List[TraceStep] = field(default_factory=list)

    def append(self, step: TraceStep) -> None:
        self.steps.append(step)

    def __len__(self) -> int:
        return len(self.steps)

    def rule_counts(self) -> Dict[int, int]:
        counts = {rule.value: 0 for rule in Rule}
        for step in self.steps:
            counts[step.rule] += 1
        return counts

    def to_jsonl(self) -> str:
        return "".join(json.dumps(step.to_dict()) + "\n" for step in self.steps)

    @classmethod
    def from_jsonl(cls, text: str) -> "ReductionTrace":
        return cls([TraceStep.from_dict(json.loads(line)) for line in text.splitlines() if line.strip()])


@dataclass(frozen=True)
class RuleApplication:
    state: ReductionState
    step: TraceStep


def _delete_modulator_vertex(s: ReductionState, x: VertexId, rule: Rule) -> RuleApplication:
    step = TraceStep(rule.value, (x,), s.k - 1)
    if step.k_after < 0:
        raise BudgetExhausted(step)
    g = s.graph.delete_vertices([x])
    modulator = repair_after_vertex_deletion(g, s.modulator, x)
    logger.info(f"Rule {rule.value} deletes {x}, k -> {step.k_after}, |M| -> {len(modulator)}")
    return RuleApplication(build_state(Instance(g, step.k_after), modulator), step)


def rule1(s: ReductionState) -> Optional[RuleApplication]:
    """Delete a modulator vertex adjacent to at least k + 5 blocks."""
    prof = profile(s)
    qualifying = [x for x, n in prof.adjacent_blocks.items() if n >= s.k + STAR_SLACK]
    if not qualifying:
        return None
    return _delete_modulator_vertex(s, min(qualifying), Rule.STAR)


def rule2(s: ReductionState) -> Optional[RuleApplication]:
    """Delete a modulator vertex with at least k + 1 neighbours in each of five blocks."""
    prof = profile(s)
    qualifying = [x for x, n in prof.heavy_blocks.items() if n >= HEAVY_BLOCKS]
    if not qualifying:
        return None
    return _delete_modulator_vertex(s, min(qualifying), Rule.HEAVY)


def _first_smooth_center(touched: Tuple[bool, ...]) -> Optional[int]:
    """Smallest i with blocks i-3..i+3 all nonadjacent to M."""
    half = SMOOTH_RUN // 2
    run = 0
    for idx, hit in enumerate(touched):
        run = 0 if hit else run + 1
        if run >= SMOOTH_RUN:
            return idx - half
    return None


def rule3(s: ReductionState) -> Optional[RuleApplication]:
    """
    Contract one block in the middle of seven consecutive blocks untouched by M.

    With u the last vertex of K[i-2] and v the first of K[i+2], a minimum
    u-v separator of G - M misses one of K[i-1], K[i], K[i+1]; the first
    such block is contracted. k is unchanged.
    """
    center = _first_smooth_center(profile(s).block_touched)
    if center is None:
        return None

    cliques = s.partition.cliques
    u, v = cliques[center - 2][-1], cliques[center + 2][0]
    rest = s.rest
    rest_nx = rest.to_networkx()
    separator = minimum_st_node_cut(rest_nx, u, v) if nx.has_path(rest_nx, u, v) else set()
    logger.debug(f"Rule 3 around block {center}: separator {sorted(separator)} between {u} and {v}")

    chosen = next(
        (idx for idx in (center - 1, center, center + 1) if not separator.intersection(cliques[idx])),
        None,
    )
    if chosen is None:
        raise InternalLogicError(f"separator {sorted(separator)} meets blocks {center - 1}..{center + 1}")

    added = contraction_biclique(rest, s.partition, chosen)
    g = s.graph.delete_vertices(cliques[chosen]).add_edges(added)
    modulator = repair_after_contraction(g, s.modulator)
    step = TraceStep(Rule.SMOOTH.value, tuple(cliques[chosen]), s.k, tuple(added))
    logger.info(f"Rule 3 contracts block {chosen} ({len(cliques[chosen])} vertices)")
    return RuleApplication(build_state(Instance(g, s.k), modulator), step)


RULES: Tuple[Callable[[ReductionState], Optional[RuleApplication]], ...] = (rule1, rule2, rule3)


@dataclass(frozen=True)
class ReductionOutcome:
    """
    Result of reduce_to_fixpoint.

    state is None exactly when the instance was recognized as NO; reason
    then says why. initial_blocks is 0 when no state was ever built.
    """
    state: Optional[ReductionState]
    trace: ReductionTrace
    initial_modulator: Modulator
    reason: Optional[str] = None
    initial_blocks: int = 0

    @property
    def is_no(self) -> bool:
        return self.state is None


def _oversized(modulator: Modulator, k: int) -> bool:
    return len(modulator) > APPROXIMATION_RATIO * k


def _oversize_reason(modulator: Modulator, k: int) -> str:
    return f"modulator size {len(modulator)} exceeds {APPROXIMATION_RATIO * k}"


def reduce_to_fixpoint(inst: Instance, modulator: Optional[Modulator] = None) -> ReductionOutcome:
    """
    Apply rules 1, 2, 3 in priority order until none applies.

    Returns NO when the modulator exceeds 6k or a deletion drives k below 0.

    Args:
        inst: Instance to reduce
        modulator: Precomputed approximate(inst.graph), if the caller has one
    """
    if modulator is None:
        modulator = approximate(inst.graph)
    trace = ReductionTrace()
    if _oversized(modulator, inst.k):
        reason = _oversize_reason(modulator, inst.k)
        logger.info(f"{reason}, answering NO")
        return ReductionOutcome(None, trace, modulator, reason)

    state = build_state(inst, modulator)
    initial_blocks = len(state.partition)
    while True:
        applied = None
        for rule in RULES:
            try:
                applied = rule(state)
            except BudgetExhausted as exc:
                trace.append(exc.step)
                logger.info(f"{exc}, answering NO")
                return ReductionOutcome(None, trace, modulator, str(exc), initial_blocks)
            if applied is not None:
                break
        if applied is None:
            logger.info(f"Reduced after {len(trace)} steps: n={state.graph.n}, k={state.k}, blocks={len(state.partition)}")
            return ReductionOutcome(state, trace, modulator, None, initial_blocks)

        trace.append(applied.step)
        state = applied.state
        if _oversized(state.modulator, state.k):
            reason = _oversize_reason(state.modulator, state.k)
            logger.info(f"{reason}, answering NO")
            return ReductionOutcome(None, trace, modulator, reason, initial_blocks)


def replay_trace(instance: Instance, trace: ReductionTrace) -> Instance:
    """
    Re-apply recorded steps to the original instance.

    Raises:
        BudgetExhausted: the trace ends with a step that drove k below 0
    """
    g, k = instance.graph, instance.k
    for step in trace.steps:
        if step.rule not in (rule.value for rule in Rule):
            raise DomainError(f"unknown rule {step.rule} in trace")
        g = g.delete_vertices(step.vertices)
        if step.added_edges:
            g = g.add_edges(step.added_edges)
        if step.k_after < 0:
            raise BudgetExhausted(step)
        k = step.k_after
    return Instance(g, k)


def is_reduced(state: ReductionState) -> bool:
    """None of the three rules applies to state."""
    prof = profile(state)
    if any(n >= state.k + STAR_SLACK for n in prof.adjacent_blocks.values()):
        return False
    if any(n >= HEAVY_BLOCKS for n in prof.heavy_blocks.values()):
        return False
    return _first_smooth_center(prof.block_touched) is None
