import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from obsrep import Graph, ObstacleRepresentation, Subcoloring, blocking_multiplicity, verify
from obsrep.construct import (bipartite_geometry, bipartition, ensure_general_position, greedy_subcoloring,
                              layered_layout, represent_bipartite, represent_cobipartite, represent_general,
                              represent_split, represent_subcolored, split_partition)
from obsrep.construct.common import Complete, blocks_exactly, rebuild_obstacle
from obsrep.geom import ConvexObstacle, P, Segment, convex_hull, no_three_collinear, point_in_convex, seg_hits_obstacle
from obsrep.model import Rule


def random_bipartite(m, n, p, rng):
    return Graph(m + n, [(a, m + b) for a in range(m) for b in range(n) if rng.random() < p])


def log2ceil(n):
    return math.ceil(math.log2(n)) if n > 1 else 0


def h_recursion(n, memo={1: 0}):
    if n not in memo:
        memo[n] = h_recursion((n + 1) // 2) + h_recursion(n // 2) + n - 1
    return memo[n]


# ---------------------------------------------------------------- bipartite, co-bipartite, split

def test_cobipartite_of_complete_bipartite_uses_every_level():
    for m, n in [(2, 3), (3, 3), (4, 2)]:
        H = random_bipartite(m, n, 1.0, random.Random(0))
        rep = represent_cobipartite(H, list(range(m)), list(range(m, m + n)))
        assert verify(H.complement(), rep).passed
        assert len(rep.obstacles) <= m + n - 1


def test_cobipartite_of_empty_graph_has_no_obstacles():
    H = Graph(6)
    rep = represent_cobipartite(H, [0, 1, 2], [3, 4, 5])
    assert len(rep.obstacles) == 0 and verify(H.complement(), rep).passed


def test_cobipartite_of_matching_blocks_each_pair_once():
    H = Graph(6, [(0, 3), (1, 4), (2, 5)])
    rep = represent_cobipartite(H, [0, 1, 2], [3, 4, 5])
    G = H.complement()
    assert verify(G, rep).passed and len(rep.obstacles) <= 5
    assert set(blocking_multiplicity(G, rep).values()) == {1}


def test_bipartite_single_edge():
    rep = represent_bipartite(Graph(2, [(0, 1)]))
    assert verify(Graph(2, [(0, 1)]), rep).passed and len(rep.obstacles) <= 1


@settings(max_examples=25)
@given(st.integers(1, 5), st.integers(1, 5), st.randoms(use_true_random=False))
def test_bipartite_within_bound(m, n, rng):
    H = random_bipartite(m, n, 0.5, rng)
    A, B = list(range(m)), list(range(m, m + n))
    rep = represent_bipartite(H, A, B)
    assert verify(H, rep).passed
    assert len(rep.obstacles) <= m + n - 1
    side_arcs = [o for o, t in zip(rep.obstacles, rep.tags) if t in ("O_P", "O_Q", "O_all")]
    for side in (A, B):
        for u, v in itertools.combinations(side, 2):
            s = Segment(rep.placement[u], rep.placement[v])
            assert any(seg_hits_obstacle(s, o) for o in side_arcs)


def test_bipartite_rejects_bad_sides():
    H = Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        represent_bipartite(H, [0, 1], [2])
    with pytest.raises(ValueError):
        bipartition(Graph(3, [(0, 1), (1, 2), (0, 2)]))


def test_split_examples():
    K = Graph.complete(5)
    rep = represent_split(K, list(range(5)), [])
    assert len(rep.obstacles) == 0 and verify(K, rep).passed
    star = Graph(6, [(0, v) for v in range(1, 6)])
    clique, indep = split_partition(star)
    assert 0 in clique and len(clique) <= 2
    rep = represent_split(star, clique, indep)
    assert verify(star, rep).passed and len(rep.obstacles) <= 5
    with pytest.raises(ValueError):
        represent_split(star, [1], [0, 2, 3, 4, 5])


def test_face_obstacles_lie_in_their_faces():
    geo = bipartite_geometry(4, 3)
    A = geo.K.A
    for g in list(geo.levels.values()) + list(geo.corners.values()):
        if g.face is None:
            continue
        assert A.is_convex_face(g.face)
        region = convex_hull(A.face_boundary_points(g.face)[0])
        o = g.obstacle(g.pairs)
        assert all(point_in_convex(region, v) for v in o.vertices)


# ---------------------------------------------------------------- general graphs

def test_h_recursion_bound():
    assert [h_recursion(n) for n in (1, 2, 4, 8)] == [0, 1, 5, 17]
    for n in range(1, 1025):
        assert h_recursion(n) <= n * log2ceil(n) - n + 1


def test_general_single_vertex():
    rep = represent_general(Graph(1))
    assert len(rep.obstacles) == 0


@pytest.mark.parametrize("seed", range(4))
def test_general_n8(seed):
    rng = random.Random(seed)
    G = Graph(8, [p for p in itertools.combinations(range(8), 2) if rng.random() < 0.5])
    rep = ensure_general_position(represent_general(G))
    assert verify(G, rep).passed and len(rep.obstacles) <= 17
    assert no_three_collinear(rep.placement)


def test_general_assignment_and_determinism():
    rng = random.Random(7)
    G = Graph(6, [p for p in itertools.combinations(range(6), 2) if rng.random() < 0.4])
    f = [3, 0, 5, 1, 4, 2]
    a, b = represent_general(G, f), represent_general(G, list(f))
    assert a.placement == b.placement and a.obstacles == b.obstacles and a.tags == b.tags
    assert verify(G, a).passed
    with pytest.raises(ValueError):
        represent_general(G, [0, 0, 1, 2, 3, 4])


def test_layout_epsilons_shrink():
    L = layered_layout(tuple((1,) for _ in range(8)))
    assert all(b < a for a, b in zip(L.epsilons, L.epsilons[1:]))
    assert L.alpha is not None and L.alpha > 0


# ---------------------------------------------------------------- subcolored graphs

def cliques_union(t):
    edges = [(i * t + a, i * t + b) for i in range(t) for a, b in itertools.combinations(range(t), 2)]
    return Graph(t * t, edges), Subcoloring(tuple([0] * t * t), tuple(v // t for v in range(t * t)))


@pytest.mark.parametrize("t", [2, 3, 4])
def test_union_of_cliques(t):
    G, c = cliques_union(t)
    rep = represent_subcolored(G, c)
    assert verify(G, rep).passed
    assert len(rep.obstacles) <= t * t - 1
    assert set(blocking_multiplicity(G, rep).values()) <= {1}


def test_complete_graph_monochromatic():
    G = Graph.complete(5)
    rep = represent_subcolored(G, Subcoloring((0,) * 5, (0,) * 5))
    assert len(rep.obstacles) == 0 and verify(G, rep).passed


def test_invalid_subcoloring_rejected():
    G = Graph(3, [(0, 1)])
    with pytest.raises(ValueError):
        represent_subcolored(G, Subcoloring((0, 0, 0), (0, 1, 0)))


@settings(max_examples=15)
@given(st.integers(2, 10), st.randoms(use_true_random=False))
def test_subcolored_random(n, rng):
    G = Graph(n, [p for p in itertools.combinations(range(n), 2) if rng.random() < 0.5])
    c = greedy_subcoloring(G)
    c.validate(G)
    rep = represent_subcolored(G, c)
    assert verify(G, rep).passed
    assert len(rep.obstacles) <= (n - 1) * (log2ceil(c.num_colors) + 1)
    assert set(blocking_multiplicity(G, rep).values()) <= {1}


def test_greedy_subcoloring_examples():
    assert greedy_subcoloring(Graph.complete(4)).num_colors == 1
    assert greedy_subcoloring(Graph(4)).num_colors == 1
    C5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    c = greedy_subcoloring(C5)
    c.validate(C5)
    assert c.num_colors <= 3


# ---------------------------------------------------------------- perturbation and rules

def test_general_position_input_is_returned_unchanged():
    rep = represent_general(Graph(4, [(0, 1)]))
    assert ensure_general_position(rep) is rep


def test_collinear_input_is_perturbed():
    pts = (P(0, 0), P(1, 0), P(2, 0), P(0, 3))
    rep = ObstacleRepresentation(pts, [ConvexObstacle((P("3/2", "1/8"), P("3/2", -1)))],
                                 rules=[Rule("fixed", frozenset())])
    before = {p for p, k in blocking_multiplicity(Graph(4), rep).items() if k}
    out = ensure_general_position(rep)
    assert no_three_collinear(out.placement)
    assert {p for p, k in blocking_multiplicity(Graph(4), out).items() if k} == before


@pytest.mark.parametrize("seed", range(3))
def test_rules_rebuild_obstacles_blocking_their_targets(seed):
    rng = random.Random(seed)
    H = random_bipartite(3, 4, 0.5, rng)
    rep = represent_bipartite(H, [0, 1, 2], [3, 4, 5, 6])
    K = Complete.build(rep.placement)
    for rule, o in zip(rep.rules, rep.obstacles):
        assert blocks_exactly(rep.placement, o, set(rule.targets))
        assert blocks_exactly(rep.placement, rebuild_obstacle(rule, rep.placement, K), set(rule.targets))
