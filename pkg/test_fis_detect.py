#!/usr/bin/env python3
"""
Tests for forbidden induced subgraph detection
"""

import random

import pytest

from uivd.config import TEST_TRIALS
from uivd.fis_detect import (
    FisKind,
    ForbiddenSubgraph,
    SmallKind,
    find_any_fis,
    find_hole,
    find_small_fis,
    validate_certificate,
)
from testgraphs import (
    EXHAUSTIVE_N,
    all_graphs,
    brute_force_is_unit_interval,
    brute_force_shortest_hole,
    claw,
    clique,
    cycle,
    disjoint_union,
    make_graph,
    net,
    path,
    random_graph,
    tent,
)


def test_claw_certificate_lists_center_first():
    found = find_small_fis(claw())
    assert found == ForbiddenSubgraph(FisKind.CLAW, (0, 1, 2, 3))
    assert validate_certificate(claw(), found)


def test_net_and_tent_are_found():
    found = find_any_fis(net())
    assert found.kind is FisKind.NET
    assert validate_certificate(net(), found)

    found = find_any_fis(tent())
    assert found.kind is FisKind.TENT
    assert validate_certificate(tent(), found)


def test_clique_has_no_obstruction():
    assert find_small_fis(clique(6)) is None
    assert find_hole(clique(6)) is None
    assert find_any_fis(clique(6)) is None


def test_kind_filter():
    c5 = cycle(5)
    assert find_small_fis(c5, kinds=[SmallKind.C4]) is None
    found = find_small_fis(c5, kinds=[SmallKind.C5])
    assert found.kind is FisKind.HOLE
    assert found.length == 5
    assert validate_certificate(c5, found)


def test_long_hole():
    found = find_hole(cycle(6))
    assert found.length == 6
    assert set(found.vertices) == set(range(6))
    assert find_small_fis(cycle(6)) is None


def test_tree_has_no_hole():
    assert find_hole(path(7)) is None
    assert find_hole(claw()) is None


def test_c4_with_universal_vertex():
    g = make_graph(5, cycle(4).edges() + [(v, 4) for v in range(4)])
    found = find_hole(g)
    assert found.length == 4
    assert set(found.vertices) == {0, 1, 2, 3}


def test_anchors_restrict_the_search():
    g = disjoint_union(claw(), claw())
    found = find_small_fis(g, anchors=[5])
    assert set(found.vertices) == {4, 5, 6, 7}
    assert find_small_fis(g, anchors=[]) is None


def test_validate_certificate_rejects_wrong_claims():
    g = claw()
    assert not validate_certificate(g, ForbiddenSubgraph(FisKind.CLAW, (1, 0, 2, 3)))
    assert not validate_certificate(g, ForbiddenSubgraph(FisKind.CLAW, (0, 1, 2, 9)))
    assert not validate_certificate(cycle(5), ForbiddenSubgraph(FisKind.HOLE, (0, 2, 1, 3, 4)))
    assert not validate_certificate(net(), ForbiddenSubgraph(FisKind.TENT, (0, 1, 2, 3, 4, 5)))


def _check_against_brute_force(g):
    found = find_any_fis(g)
    expected = brute_force_is_unit_interval(g)
    assert (found is None) == expected, g.edges()
    if found is not None:
        assert validate_certificate(g, found), found


def test_exhaustive_small_graphs():
    for n in range(1, EXHAUSTIVE_N + 1):
        for g in all_graphs(n):
            _check_against_brute_force(g)


def test_random_graphs_against_brute_force():
    rng = random.Random(11)
    for _ in range(TEST_TRIALS):
        n = rng.randint(6, 8)
        _check_against_brute_force(random_graph(n, rng.choice([0.3, 0.5, 0.7]), rng))


def test_hole_is_shortest():
    rng = random.Random(23)
    for _ in range(TEST_TRIALS):
        g = random_graph(rng.randint(4, 8), 0.35, rng)
        found = find_hole(g)
        expected = brute_force_shortest_hole(g)
        if expected is None:
            assert found is None
        else:
            assert found.length == expected
            assert validate_certificate(g, found)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__]))
