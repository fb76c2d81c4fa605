#!/usr/bin/env python3
"""
KernelizationPipeline: modulator, reduction and picking glued together

Also hosts the end-to-end verifier that compares the exact oracle on an
instance and on its kernel.
"""

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import List, Optional, Union

from ..config import DEFAULT_WORKERS, ORACLE_VERTEX_LIMIT
from ..errors import InternalLogicError, OversizeError
from ..generator import generate
from ..graph_core import Graph, Instance, VertexId, serialize, serialize_map
from ..oracle import oracle_opt, oracle_solve
from ..recognition import validate_model, validate_partition
from ..schemas import RunStats, StageTimings, VerifyRecord
from .modulator import Modulator, approximate, validate_modulator
from .picker import PickReport, assemble_kernel, pick_all
from .reduction import APPROXIMATION_RATIO, ReductionState, ReductionTrace, is_reduced, reduce_to_fixpoint

logger = logging.getLogger(__name__)


class Verdict(Enum):
    KERNEL = "kernel"
    NO = "no"


@dataclass(frozen=True)
class KernelizationResult:
    """
    Everything one run produced.

    kernel and mapping are None for a NO verdict; picks and state are None
    for a NO verdict and for a small instance passed through unchanged.
    """
    verdict: Verdict
    original: Instance
    modulator: Modulator
    trace: ReductionTrace
    stats: RunStats
    state: Optional[ReductionState] = None
    picks: Optional[PickReport] = None
    kernel: Optional[Instance] = None
    mapping: Optional[List[VertexId]] = None


class KernelizationPipeline:
    """Runs the whole kernelization on one instance."""

    def __init__(self, check_invariants: bool = False, small_instance_shortcut: bool = False):
        """
        Args:
            check_invariants: Re-validate model, partition, modulator and
                reducedness of the final state (slow; used by verify)
            small_instance_shortcut: Return (G, k) itself when n < k^4, which
                is already within the kernel size
        """
        self.check_invariants = check_invariants
        self.small_instance_shortcut = small_instance_shortcut

    def _check(self, state: ReductionState) -> None:
        rest = state.rest
        if not validate_model(rest, state.model):
            raise InternalLogicError("final unit interval model is invalid")
        if not validate_partition(rest, state.partition):
            raise InternalLogicError("final clique partition is invalid")
        if not validate_modulator(state.graph, state.modulator):
            raise InternalLogicError("final modulator is invalid")
        if not is_reduced(state):
            raise InternalLogicError("fixpoint state still admits a rule")

    def _pass_through(self, original: Instance, started: float) -> KernelizationResult:
        graph, k = original.graph, original.k
        logger.info(f"n={graph.n} < k^4={k ** 4}, instance is its own kernel")
        _, mapping = serialize(graph)
        trace = ReductionTrace()
        stats = RunStats(
            verdict=Verdict.KERNEL.value,
            input_n=graph.n,
            input_m=graph.m,
            k=k,
            k_after=k,
            modulator_size=0,
            rule_applications={str(rule): n for rule, n in trace.rule_counts().items()},
            blocks_before=0,
            kernel_n=graph.n,
            kernel_m=graph.m,
            shortcut=True,
            seconds=StageTimings(total=time.perf_counter() - started),
        )
        return KernelizationResult(Verdict.KERNEL, original, Modulator(), trace, stats, kernel=original, mapping=mapping)

    def run(self, graph: Graph, k: int) -> KernelizationResult:
        """
        Kernelize (graph, k).

        Returns:
            KernelizationResult with verdict KERNEL and an equivalent
            instance, or verdict NO
        """
        original = Instance(graph, k)
        started = time.perf_counter()
        if self.small_instance_shortcut and graph.n < k ** 4:
            return self._pass_through(original, started)

        modulator = approximate(graph)
        after_modulator = time.perf_counter()

        outcome = reduce_to_fixpoint(original, modulator=modulator)
        after_reduction = time.perf_counter()

        counts = {str(rule): n for rule, n in outcome.trace.rule_counts().items()}
        common = dict(
            input_n=graph.n,
            input_m=graph.m,
            k=k,
            modulator_size=len(modulator),
            rule_applications=counts,
            blocks_before=outcome.initial_blocks,
        )

        if outcome.is_no:
            stats = RunStats(
                verdict=Verdict.NO.value,
                no_reason=outcome.reason,
                seconds=StageTimings(
                    modulator=after_modulator - started,
                    reduction=after_reduction - after_modulator,
                    total=after_reduction - started,
                ),
                **common,
            )
            logger.info(f"Verdict NO: {outcome.reason}")
            return KernelizationResult(Verdict.NO, original, modulator, outcome.trace, stats)

        state = outcome.state
        if self.check_invariants:
            self._check(state)
        picks = pick_all(state)
        kernel = assemble_kernel(state, picks)
        _, mapping = serialize(kernel.graph)
        finished = time.perf_counter()

        stats = RunStats(
            verdict=Verdict.KERNEL.value,
            k_after=state.k,
            blocks_after=len(state.partition),
            kernel_n=kernel.graph.n,
            kernel_m=kernel.graph.m,
            seconds=StageTimings(
                modulator=after_modulator - started,
                reduction=after_reduction - after_modulator,
                picking=finished - after_reduction,
                total=finished - started,
            ),
            **common,
        )
        return KernelizationResult(
            Verdict.KERNEL, original, modulator, outcome.trace, stats,
            state=state, picks=picks, kernel=kernel, mapping=mapping,
        )

    def write_outputs(
        self, result: KernelizationResult, out_prefix: Union[str, Path], stats_path: Optional[Union[str, Path]] = None
    ) -> List[Path]:
        """
        Write <out>.graph, <out>.map (kernel only), <out>.picks.json (when
        vertices were picked), <out>.trace.jsonl and the stats JSON.

        Returns:
            Paths written
        """
        prefix = Path(out_prefix)
        prefix.parent.mkdir(parents=True, exist_ok=True)
        written = []

        def put(path: Path, text: str) -> None:
            path.write_text(text, encoding="ascii")
            written.append(path)

        if result.verdict is Verdict.KERNEL:
            text, mapping = serialize(result.kernel.graph)
            put(Path(f"{prefix}.graph"), text)
            put(Path(f"{prefix}.map"), serialize_map(mapping))
        if result.picks is not None:
            put(Path(f"{prefix}.picks.json"), json.dumps(result.picks.to_dict(), indent=2) + "\n")
        put(Path(f"{prefix}.trace.jsonl"), result.trace.to_jsonl())
        stats_file = Path(stats_path) if stats_path else Path(f"{prefix}.stats.json")
        put(stats_file, result.stats.model_dump_json(indent=2) + "\n")

        logger.info(f"Wrote {len(written)} files for {prefix}")
        return written


def verify_instance(
    graph: Graph, k: int, force: bool = False, limit: int = ORACLE_VERTEX_LIMIT, seed: Optional[int] = None
) -> VerifyRecord:
    """
    Kernelize and check that the oracle gives the same answer on both sides.

    The modulator ratio |M| <= 6 opt is checked too when the input itself is
    within the oracle limit.

    Raises:
        OversizeError: the instance the oracle would run on (the reduced
            one, or the input after a NO verdict) has more than `limit`
            vertices and force is off
    """
    result = KernelizationPipeline(check_invariants=True).run(graph, k)
    reduced_n = result.state.graph.n if result.state is not None else None
    oracle_n = reduced_n if reduced_n is not None else graph.n
    if not force and oracle_n > limit:
        what = "reduced instance" if reduced_n is not None else "instance"
        logger.warning(f"{what.capitalize()} has {oracle_n} > {limit} vertices, not running the oracle")
        raise OversizeError(f"{what} has {oracle_n} vertices, limit is {limit} (use --force)")

    original_feasible = oracle_solve(Instance(graph, k)) is not None
    if result.verdict is Verdict.NO:
        kernel_feasible = False
    else:
        kernel_feasible = oracle_solve(result.kernel) is not None

    opt = None
    ratio_ok = None
    if force or graph.n <= limit:
        opt = oracle_opt(graph)
        ratio_ok = len(result.modulator) <= APPROXIMATION_RATIO * opt

    agree = original_feasible == kernel_feasible
    if not agree:
        logger.error(f"Oracle mismatch (seed={seed}): original {original_feasible}, kernel {kernel_feasible}")
    return VerifyRecord(
        agree=agree,
        original_feasible=original_feasible,
        kernel_feasible=kernel_feasible,
        kernel_verdict=result.verdict.value,
        input_n=graph.n,
        reduced_n=reduced_n,
        modulator_size=len(result.modulator),
        opt=opt,
        ratio_ok=ratio_ok,
        seed=seed,
    )


def _verify_generated(n: int, noise: int, k: int, seed: int, force: bool, limit: int) -> VerifyRecord:
    return verify_instance(generate(n, noise, seed), k, force=force, limit=limit, seed=seed)


def verify_batch(
    count: int,
    n: int,
    noise: int,
    k: int,
    seed: int = 0,
    workers: int = DEFAULT_WORKERS,
    force: bool = False,
    limit: int = ORACLE_VERTEX_LIMIT,
) -> List[VerifyRecord]:
    """Verify `count` generated instances with seeds seed, seed + 1, ..."""
    seeds = list(range(seed, seed + count))
    args = [(n, noise, k, s, force, limit) for s in seeds]
    if workers <= 1:
        records = [_verify_generated(*a) for a in args]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_verify_generated, *zip(*args)))
    failures = sum(1 for r in records if not r.agree)
    logger.info(f"Verified {count} instances, {failures} mismatches")
    return records
