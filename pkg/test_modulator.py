#!/usr/bin/env python3
"""
Tests for the two-phase modulator and its incremental repair
"""

import random

import pytest

from uivd.config import TEST_TRIALS
from uivd.errors import DomainError
from uivd.fis_detect import FisKind
from uivd.generator import generate
from uivd.kernel import (
    Modulator,
    Phase,
    approximate,
    phase2_exact_hole_hitting,
    repair_after_contraction,
    repair_after_vertex_deletion,
    validate_modulator,
)
from uivd.oracle import oracle_opt
from uivd.recognition import is_unit_interval
from testgraphs import claw, clique, cycle, disjoint_union, make_graph, path


def test_unit_interval_graph_has_empty_modulator():
    m = approximate(path(6))
    assert len(m) == 0
    assert validate_modulator(path(6), m)


def test_claw_goes_whole_into_phase1():
    m = approximate(claw())
    assert m.members == frozenset({0, 1, 2, 3})
    assert len(m.obstructions) == 1
    assert m.obstructions[0].kind is FisKind.CLAW
    assert m.phase2 == frozenset()
    assert oracle_opt(claw()) == 1
    assert all(p.phase is Phase.PHASE1 and p.obstruction == 0 for p in m.provenance().values())


def test_long_hole_is_hit_by_phase2():
    m = approximate(cycle(6))
    assert m.phase1_members == frozenset()
    assert len(m.phase2) == 1
    assert validate_modulator(cycle(6), m)


def test_phase2_is_exact():
    assert phase2_exact_hole_hitting(path(5)) == frozenset()
    assert phase2_exact_hole_hitting(clique(4)) == frozenset()
    assert len(phase2_exact_hole_hitting(cycle(6))) == 1
    assert len(phase2_exact_hole_hitting(disjoint_union(cycle(6), cycle(7)))) == 2


def test_phase2_rejects_small_obstructions():
    with pytest.raises(DomainError):
        phase2_exact_hole_hitting(claw())


def test_modulator_serializes_provenance():
    data = approximate(disjoint_union(claw(), cycle(6))).to_dict()
    assert data["members"][:4] == [0, 1, 2, 3]
    assert data["provenance"]["0"] == "phase1:0"
    assert list(data["provenance"].values()).count("phase2") == 1


def test_ratio_on_generated_instances():
    for seed in range(max(1, TEST_TRIALS // 10)):
        g = generate(9, noise=2, seed=seed)
        m = approximate(g)
        assert validate_modulator(g, m)
        assert len(m) <= 6 * oracle_opt(g)


def test_repair_after_deleting_phase2_vertex():
    g = cycle(6)
    m = approximate(g)
    (v,) = m.phase2
    repaired = repair_after_vertex_deletion(g.delete_vertices([v]), m, v)
    assert len(repaired) == 0


def test_repair_after_deleting_claw_center():
    g = claw()
    m = approximate(g)
    repaired = repair_after_vertex_deletion(g.delete_vertices([0]), m, 0)
    assert len(repaired) == 0


def test_repair_picks_up_obstruction_through_dissolved_one():
    # two claws sharing leaf 3
    g = make_graph(7, [(0, 1), (0, 2), (0, 3), (4, 3), (4, 5), (4, 6)])
    m = approximate(g)
    assert m.members == frozenset({0, 1, 2, 3})

    h = g.delete_vertices([0])
    repaired = repair_after_vertex_deletion(h, m, 0)
    assert repaired.members == frozenset({3, 4, 5, 6})
    assert validate_modulator(h, repaired)


def test_repair_keeps_other_obstructions():
    g = disjoint_union(claw(), claw(), cycle(6))
    m = approximate(g)
    h = g.delete_vertices([0])
    repaired = repair_after_vertex_deletion(h, m, 0)
    assert repaired.phase1_members == frozenset({4, 5, 6, 7})
    assert repaired.phase2 == m.phase2
    assert validate_modulator(h, repaired)


def test_repair_rejects_non_members():
    g = disjoint_union(claw(), path(2))
    m = approximate(g)
    with pytest.raises(DomainError):
        repair_after_vertex_deletion(g.delete_vertices([4]), m, 4)
    with pytest.raises(DomainError):
        repair_after_vertex_deletion(g, m, 0)


def test_repair_after_contraction_away_from_obstructions():
    g = disjoint_union(claw(), path(9))
    m = approximate(g)
    contracted = g.delete_vertices([8]).add_edges([(7, 9)])
    assert repair_after_contraction(contracted, m) == m


def test_contraction_shortening_a_long_hole():
    g = cycle(12)
    m = approximate(g)
    assert m.phase2 == frozenset({0})
    contracted = g.delete_vertices([6]).add_edges([(5, 7)])
    repaired = repair_after_contraction(contracted, m)
    assert len(repaired.phase2) == 1
    assert validate_modulator(contracted, repaired)


def test_contraction_turning_the_hole_into_c5_empties_phase2():
    g = cycle(6)
    m = approximate(g)
    assert m.phase2 == frozenset({0})
    contracted = g.delete_vertices([3]).add_edges([(2, 4)])
    repaired = repair_after_contraction(contracted, m)
    assert repaired.phase2 == frozenset()
    assert repaired.members == frozenset({0, 1, 2, 4, 5})
    assert validate_modulator(contracted, repaired)


def test_contraction_must_not_remove_members():
    g = cycle(6)
    m = approximate(g)
    with pytest.raises(DomainError):
        repair_after_contraction(g.delete_vertices([0]), m)


def test_validate_modulator_detects_bad_sets():
    g = disjoint_union(claw(), cycle(6))
    assert not validate_modulator(g, Modulator())
    assert not validate_modulator(g, Modulator(phase2=frozenset({4})))


def test_random_deletions_keep_modulator_valid():
    rng = random.Random(3)
    for _ in range(max(1, TEST_TRIALS // 5)):
        g = generate(rng.randint(8, 16), noise=rng.randint(1, 3), seed=rng.randint(0, 10 ** 6))
        m = approximate(g)
        if not m.members:
            continue
        v = rng.choice(sorted(m.members))
        h = g.delete_vertices([v])
        repaired = repair_after_vertex_deletion(h, m, v)
        assert validate_modulator(h, repaired)
        assert is_unit_interval(h.delete_vertices(repaired.members))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__]))
