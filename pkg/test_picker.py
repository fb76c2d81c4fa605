#!/usr/bin/env python3
"""
Tests for vertex picking and kernel assembly

Most checks run on a hand-built reduced state: two cliques K1 = v1..v9 and
K2 = v10..v25 in that order, with modulator vertices x1 and x2 and k = 2.
Vertex v_i has id i, x1 is 26 and x2 is 27; block 0 is K1 and block 1 is K2.
"""

import pytest

from uivd.graph_core import Graph, Instance
from uivd.kernel import (
    Modulator,
    Pattern,
    assemble_kernel,
    build_state,
    per_block_bound,
    pick_all,
    pick_k0,
    pick_k1,
    pick_k2,
    pick_k3,
    pick_k4,
    pick_v0,
)
from uivd.recognition import ProperIntervalOrdering
from testgraphs import make_graph

X1, X2 = 26, 27

# last K2 vertex each K1 vertex reaches (v1 sees no K2 vertex)
REACH = {2: 10, 3: 11, 4: 12, 5: 12, 6: 17, 7: 20, 8: 22, 9: 23}
X1_NEIGHBORS = (4, 6, 7, 8, 10, 12, 13, 18, 21, 24)
X2_NEIGHBORS = (3, 7, 10, 12, 13, 14, 18, 21, 23, 24)


def _two_clique_graph() -> Graph:
    edges = []
    k1, k2 = range(1, 10), range(10, 26)
    edges.extend((u, v) for u in k1 for v in k1 if u < v)
    edges.extend((u, v) for u in k2 for v in k2 if u < v)
    for v, reach in REACH.items():
        edges.extend((v, w) for w in range(10, reach + 1))
    edges.extend((X1, v) for v in X1_NEIGHBORS)
    edges.extend((X2, v) for v in X2_NEIGHBORS)
    return Graph.from_edges(range(1, 28), edges)


@pytest.fixture
def state():
    return build_state(
        Instance(_two_clique_graph(), 2),
        Modulator(phase2=frozenset({X1, X2})),
        ordering=ProperIntervalOrdering(tuple(range(1, 26))),
    )


def test_fixture_blocks(state):
    assert state.partition.cliques == (tuple(range(1, 10)), tuple(range(10, 26)))


def test_k1_pattern_classes(state):
    k1 = pick_k1(state)
    assert k1[(1, X1, X2, Pattern.BOTH)] == (10, 12, 13, 18, 21, 24)
    assert k1[(1, X1, X2, Pattern.ONLY_FIRST)] == ()
    assert k1[(1, X1, X2, Pattern.ONLY_SECOND)] == (14, 23)
    assert k1[(1, X1, X2, Pattern.NEITHER)] == (11, 15, 16, 20, 22, 25)


def test_k2_common_neighbours(state):
    k2 = pick_k2(state)
    assert k2[(1, X2, 6)] == (12, 13, 14)
    assert k2[(1, X2, 8)] == (14, 18, 21)
    assert k2[(1, X2, 9)] == (18, 21, 23)
    assert k2[(0, X2, 11)] == (3, 7)
    assert k2[(0, X2, 15)] == (7,)
    assert k2[(0, X2, 16)] == (7,)


def test_k2_only_considers_outermost_non_neighbours(state):
    k2 = pick_k2(state)
    from_left = {y for (idx, x, y) in k2 if idx == 1 and x == X2}
    assert from_left == {6, 8, 9}
    from_right = {y for (idx, x, y) in k2 if idx == 0 and x == X2}
    assert from_right == {11, 15, 16}


def test_k3_neighbours_missing_y(state):
    k3 = pick_k3(state)
    assert k3[(1, X1, 4)] == (13, 18, 21)
    assert k3[(1, X1, 6)] == (18, 21, 24)
    assert k3[(1, X1, 7)] == (21, 24)
    assert k3[(0, X1, 24)] == (6, 7, 8)
    assert k3[(0, X1, 21)] == (4, 6, 7)
    assert k3[(0, X1, 18)] == (4, 6)


def test_k4_neighbours_of_y_missing_x(state):
    k4 = pick_k4(state)
    assert k4[(1, X1, 6)] == (15, 16, 17)
    assert k4[(1, X1, 7)] == (17, 19, 20)
    assert k4[(1, X1, 8)] == (19, 20, 22)


def test_kernel_keeps_modulator_and_picks(state):
    report = pick_all(state)
    kernel = assemble_kernel(state, report)
    assert kernel.k == state.k
    assert {X1, X2} <= set(kernel.graph.vertices)
    assert report.union <= set(kernel.graph.vertices)
    assert not report.union & {X1, X2}
    assert {12, 13, 14, 15, 16, 17, 19, 20, 22} <= report.union
    # induced: every kernel edge is an edge of G
    assert all(state.graph.has_edge(u, v) for u, v in kernel.graph.edges())


def test_per_block_bound_holds(state):
    report = pick_all(state)
    bound = per_block_bound(len(state.modulator), state.k)
    assert all(len(vs) <= bound for vs in report.per_block_union().values())
    assert per_block_bound(2, 2) == 156


def test_pick_report_serializes(state):
    data = pick_all(state).to_dict()
    assert set(data) == {"K0", "K1", "K1x", "K1x_bar", "K2", "K3", "K4", "V0", "union"}
    assert data["V0"] == []
    assert {"key": [1, X1, X2, "~x1,x2"], "vertices": [14, 23]} in data["K1"]


def _clique_with_outsider(k: int):
    """Clique 0..9 in order; x = 10 sees 2..7."""
    edges = [(u, v) for u in range(10) for v in range(u + 1, 10)] + [(10, v) for v in range(2, 8)]
    return build_state(
        Instance(make_graph(11, edges), k),
        Modulator(phase2=frozenset({10})),
        ordering=ProperIntervalOrdering(tuple(range(10))),
    )


def test_k0_takes_ends_of_block_and_neighbourhoods():
    k0 = pick_k0(_clique_with_outsider(0))
    assert k0[0] == (0, 2, 7, 9)


def test_k0_takes_small_blocks_whole():
    k0 = pick_k0(_clique_with_outsider(4))
    assert k0[0] == tuple(range(10))


def _modulator_triple_state(edges, k=1):
    """Clique 0..3 outside; M = {4, 5, 6}."""
    base = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    return build_state(
        Instance(make_graph(7, base + list(edges)), k),
        Modulator(phase2=frozenset({4, 5, 6})),
    )


def test_v0_for_independent_triple():
    s = _modulator_triple_state([(x, v) for x in (4, 5, 6) for v in range(4)])
    assert pick_v0(s) == (0, 1)


def test_v0_ignores_modulator_triangle():
    s = _modulator_triple_state([(4, 5), (5, 6), (4, 6)] + [(x, 0) for x in (4, 5, 6)])
    assert pick_v0(s) == ()


def test_v0_for_induced_p3():
    s = _modulator_triple_state([(4, 5), (5, 6), (5, 0), (5, 1), (5, 2), (4, 3), (5, 3)], k=0)
    assert pick_v0(s) == (0,)


def test_v0_needs_three_modulator_vertices(state):
    assert pick_v0(state) == ()


def test_mirrored_ordering_picks_the_same_kernel():
    # cliques {0,1,2}, {3..7}, {8..11}; M = {12, 13}
    blocks = [range(0, 3), range(3, 8), range(8, 12)]
    edges = [(u, v) for b in blocks for u in b for v in b if u < v]
    edges += [(12, v) for v in (1, 2, 3, 4, 5, 9)]
    edges += [(13, v) for v in (2, 3, 6, 7, 8, 10, 11)]
    inst = Instance(make_graph(14, edges), 1)
    modulator = Modulator(phase2=frozenset({12, 13}))
    ordering = ProperIntervalOrdering(tuple(range(12)))

    forward = build_state(inst, modulator, ordering=ordering)
    backward = build_state(inst, modulator, ordering=ordering.reversed())
    assert backward.partition.cliques == tuple(tuple(reversed(b)) for b in reversed(forward.partition.cliques))

    kernel_forward = assemble_kernel(forward, pick_all(forward))
    kernel_backward = assemble_kernel(backward, pick_all(backward))
    assert kernel_forward.graph == kernel_backward.graph


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__]))
