from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import points, segments
from obsrep.geom import (ConvexObstacle, P, Point, Q, Segment, convex_hull, mpq, no_three_collinear,
                         on_segment, orient, point_in_convex, seg_hits_obstacle, seg_intersection)


def test_scalar_coercion():
    assert Q("3/6") == mpq(1, 2)
    assert Q(Fraction(2, 4)) == mpq(1, 2)
    assert Q(-7) == mpq(-7)
    with pytest.raises(TypeError):
        Q(0.5)


def test_orient_examples():
    assert orient(P(0, 0), P(1, 0), P(0, 1)) == 1
    assert orient(P(0, 0), P(0, 1), P(1, 0)) == -1
    assert orient(P(0, 0), P(1, 1), P(2, 2)) == 0


@given(points, points, points)
def test_orient_antisymmetric(p, q, r):
    assert orient(p, q, r) == -orient(q, p, r) == orient(q, r, p)


def test_intersection_examples():
    assert seg_intersection(Segment(P(0, 0), P(2, 2)), Segment(P(0, 2), P(2, 0))) == P(1, 1)
    assert seg_intersection(Segment(P(0, 0), P(1, 0)), Segment(P(0, 1), P(1, 1))) is None
    ov = seg_intersection(Segment(P(0, 0), P(2, 0)), Segment(P(1, 0), P(3, 0)))
    assert ov == Segment(P(1, 0), P(2, 0))
    assert seg_intersection(Segment(P(0, 0), P(1, 0)), Segment(P(1, 0), P(2, 5))) == P(1, 0)


@given(segments(), segments())
def test_intersection_symmetric_and_on_both(s, t):
    a, b = seg_intersection(s, t), seg_intersection(t, s)
    assert a == b
    if isinstance(a, Segment):
        assert all(on_segment(p, s) and on_segment(p, t) for p in a)
    elif a is not None:
        assert on_segment(a, s) and on_segment(a, t)


@given(segments(), segments())
def test_disjoint_means_no_shared_lattice_point(s, t):
    if seg_intersection(s, t) is None:
        assert not (on_segment(t.a, s) or on_segment(t.b, s) or on_segment(s.a, t) or on_segment(s.b, t))


def test_obstacle_validation():
    with pytest.raises(ValueError):
        ConvexObstacle((P(0, 0), P(0, 1), P(1, 0)))       # clockwise
    with pytest.raises(ValueError):
        ConvexObstacle((P(0, 0), P(0, 0)))
    assert ConvexObstacle((P(0, 0),)).rank == 0
    assert ConvexObstacle((P(0, 0), P(1, 1))).rank == 1


@given(st.lists(points, min_size=1, max_size=12))
def test_hull_contains_inputs(pts):
    h = convex_hull(pts)
    assert all(point_in_convex(h, p) for p in pts)
    assert set(h.vertices) <= set(pts)


def test_hull_ranks():
    assert convex_hull([P(1, 1)] * 3).rank == 0
    assert convex_hull([P(0, 0), P(1, 1), P(2, 2)]).vertices == (P(0, 0), P(2, 2))
    assert convex_hull([P(0, 0), P(2, 0), P(1, 1), P(0, 2), P(2, 2)]).rank == 2


def test_seg_hits_closed_obstacles():
    square = convex_hull([P(0, 0), P(2, 0), P(2, 2), P(0, 2)])
    assert seg_hits_obstacle(Segment(P(-1, 1), P(3, 1)), square)
    assert seg_hits_obstacle(Segment(P(2, -1), P(2, 5)), square)          # touches a side
    assert seg_hits_obstacle(Segment(P(3, 3), P(2, 2)), square)           # touches a corner
    assert seg_hits_obstacle(Segment(P(1, 1), P(1, Q("3/2"))), square)     # inside
    assert not seg_hits_obstacle(Segment(P(3, 0), P(3, 2)), square)
    assert seg_hits_obstacle(Segment(P(0, 0), P(2, 2)), ConvexObstacle((P(1, 1),)))


def test_no_three_collinear():
    assert no_three_collinear([P(0, 0), P(1, 0), P(0, 1)])
    assert not no_three_collinear([P(0, 0), P(1, 1), P(3, 3), P(0, 1)])
    assert not no_three_collinear([P(0, 0), P(0, 1), P(0, 5)])


@given(segments(), st.lists(points, min_size=1, max_size=6))
def test_seg_hits_obstacle_matches_brute_force(s, pts):
    from oracles import brute_hits
    o = convex_hull(pts)
    assert seg_hits_obstacle(s, o) == brute_hits(s, o.vertices)
