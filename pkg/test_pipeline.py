#!/usr/bin/env python3
"""
Tests for the kernelization pipeline, its output files and the verifier
"""

import json
import random
from math import comb

import pytest

from uivd.config import STATS_SCHEMA_VERSION, TEST_TRIALS
from uivd.errors import OversizeError
from uivd.generator import generate
from uivd.graph_core import Instance, load
from uivd.kernel import (
    KernelizationPipeline,
    ReductionTrace,
    Verdict,
    per_block_bound,
    replay_trace,
    verify_batch,
    verify_instance,
)
from testgraphs import claw, cycle, disjoint_union, path


def test_unit_interval_input_keeps_its_vertices():
    result = KernelizationPipeline(check_invariants=True).run(path(8), 0)
    assert result.verdict is Verdict.KERNEL
    assert result.kernel.graph == path(8)
    assert result.stats.modulator_size == 0
    assert result.stats.kernel_n == 8


def test_no_verdict_for_oversized_modulator():
    result = KernelizationPipeline().run(disjoint_union(*[claw() for _ in range(7)]), 1)
    assert result.verdict is Verdict.NO
    assert result.kernel is None
    assert result.stats.no_reason is not None


def test_kernel_is_an_induced_subgraph_with_same_budget():
    g = disjoint_union(cycle(20), path(40), claw())
    result = KernelizationPipeline(check_invariants=True).run(g, 2)
    assert result.verdict is Verdict.KERNEL
    assert result.kernel.k == result.state.k
    assert set(result.kernel.graph.vertices) <= set(g.vertices)
    assert result.stats.rule_applications["3"] > 0
    assert result.kernel.graph.n < g.n


def test_write_outputs(tmp_path):
    g = disjoint_union(cycle(20), claw())
    pipeline = KernelizationPipeline()
    result = pipeline.run(g, 2)
    prefix = tmp_path / "out" / "run"
    written = pipeline.write_outputs(result, prefix)

    names = sorted(p.name for p in written)
    assert names == ["run.graph", "run.map", "run.picks.json", "run.stats.json", "run.trace.jsonl"]

    kernel = load((tmp_path / "out" / "run.graph").read_text())
    assert kernel.n == result.kernel.graph.n
    mapping = [int(line.split()[1]) for line in (tmp_path / "out" / "run.map").read_text().splitlines()]
    assert mapping == list(result.kernel.graph.vertices)

    stats = json.loads((tmp_path / "out" / "run.stats.json").read_text())
    assert stats["verdict"] == "kernel"
    assert stats["schema_version"] == STATS_SCHEMA_VERSION
    assert stats["shortcut"] is False

    trace = ReductionTrace.from_jsonl((tmp_path / "out" / "run.trace.jsonl").read_text())
    assert replay_trace(Instance(g, 2), trace).graph == result.state.graph


def test_write_outputs_for_no(tmp_path):
    pipeline = KernelizationPipeline()
    result = pipeline.run(disjoint_union(*[claw() for _ in range(7)]), 1)
    written = pipeline.write_outputs(result, tmp_path / "no", tmp_path / "stats.json")
    assert sorted(p.name for p in written) == ["no.trace.jsonl", "stats.json"]
    assert json.loads((tmp_path / "stats.json").read_text())["verdict"] == "no"


def test_verify_small_instance():
    record = verify_instance(disjoint_union(claw(), path(4)), 1)
    assert record.agree
    assert record.original_feasible
    assert record.opt == 1
    assert record.ratio_ok


def test_verify_refuses_oversized_instances():
    with pytest.raises(OversizeError):
        verify_instance(path(10), 0, limit=4)
    assert verify_instance(path(10), 0, limit=4, force=True).agree


def test_verify_guards_the_input_after_a_no_verdict():
    g = disjoint_union(claw(), claw(), claw())
    with pytest.raises(OversizeError):
        verify_instance(g, 0, limit=11)
    record = verify_instance(g, 0, limit=12)
    assert record.kernel_verdict == "no"
    assert record.reduced_n is None
    assert record.agree
    assert record.opt == 3


def test_small_instance_is_its_own_kernel(tmp_path):
    g = disjoint_union(claw(), path(4))
    pipeline = KernelizationPipeline(small_instance_shortcut=True)
    result = pipeline.run(g, 2)
    assert result.verdict is Verdict.KERNEL
    assert result.kernel.graph == g
    assert result.kernel.k == 2
    assert result.state is None
    assert result.stats.shortcut
    assert result.stats.kernel_n == 8

    written = pipeline.write_outputs(result, tmp_path / "small")
    assert sorted(p.name for p in written) == ["small.graph", "small.map", "small.stats.json", "small.trace.jsonl"]


def test_shortcut_leaves_larger_instances_alone():
    g = disjoint_union(cycle(20), claw())
    shortcut = KernelizationPipeline(small_instance_shortcut=True).run(g, 2)
    plain = KernelizationPipeline().run(g, 2)
    assert not shortcut.stats.shortcut
    assert shortcut.kernel.graph == plain.kernel.graph


def test_kernel_answers_match_oracle():
    rng = random.Random(53)
    for _ in range(max(1, TEST_TRIALS // 4)):
        n = rng.randint(8, 14)
        g = generate(n, noise=rng.randint(0, 2), seed=rng.randint(0, 10 ** 6))
        record = verify_instance(g, rng.randint(0, 2), limit=40)
        assert record.agree, record
        assert record.ratio_ok


SIZES = (100, 200, 400, 800) if TEST_TRIALS >= 1000 else (100, 200)


@pytest.mark.parametrize("seed", [7, 8])
def test_kernel_size_is_bounded_independently_of_n(seed):
    kernel_sizes = []
    for n in SIZES:
        result = KernelizationPipeline().run(generate(n, noise=2, seed=seed), 2)
        assert result.verdict is Verdict.KERNEL
        k, m = result.state.k, len(result.state.modulator)
        # touched blocks, with runs of at most six untouched ones around them
        blocks = 7 * (m * (k + 4) + 1)
        bound = m + blocks * per_block_bound(m, k) + comb(m, 3) * (k + 1)
        assert len(result.state.partition) <= blocks
        assert result.kernel.graph.n <= bound
        kernel_sizes.append(result.kernel.graph.n)

    # doubling n leaves the kernel where it was, up to a couple of vertices
    previous, last = kernel_sizes[-2:]
    assert abs(last - previous) <= max(2, previous // 10)


def test_verify_batch_is_seeded():
    records = verify_batch(3, 10, 1, 1, seed=5)
    assert [r.seed for r in records] == [5, 6, 7]
    assert all(r.agree for r in records)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__]))
