import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import segments
from obsrep import arrangement as arr
from obsrep.caps import CapFailure, form_cap, good_face, is_good, level_cap, lower_envelope
from obsrep.drawing import certify, dilated_drawing, edge_segment, level_edges
from obsrep.geom import HALF, P, Segment, mpq


def _value(s, x):
    (ax, ay), (bx, by) = s
    return ay + (by - ay) * (x - ax) / (bx - ax)


non_vertical = st.lists(segments().filter(lambda s: s.a.x != s.b.x), min_size=1, max_size=6)


@given(non_vertical, st.integers(-48, 48))
def test_envelope_is_pointwise_minimum(segs, k):
    x = mpq(k, 4) + mpq(1, 97)            # avoid breakpoints
    covering = [_value(s, x) for s in segs if min(s.a.x, s.b.x) <= x <= max(s.a.x, s.b.x)]
    found = [left.y + (right.y - left.y) * (x - left.x) / (right.x - left.x)
             for comp in lower_envelope(segs) for left, right, _ in comp if left.x < x < right.x]
    if covering:
        assert found == [min(covering)]
    else:
        assert found == []


def test_envelope_components_split_at_gaps():
    segs = [Segment(P(0, 0), P(1, 0)), Segment(P(2, 0), P(3, 1))]
    assert len(lower_envelope(segs)) == 2


X = [Segment(P(0, -2), P(4, 2)), Segment(P(0, 2), P(4, -2))]


@pytest.mark.parametrize("segs,reason", [
    ([X[0]], "at least two"),
    ([X[0], Segment(P(1, 0), P(1, 3))], "vertical"),
    ([X[1], X[0]], "slopes"),
    ([Segment(P(0, 0), P(1, 1)), Segment(P(5, 0), P(6, -1))], "do not cross"),
    ([Segment(P(0, 0), P(10, 10)), Segment(P(0, 6), P(10, -4)), Segment(P(0, 9), P(10, -11))], "ordered by x"),
])
def test_form_cap_failures(segs, reason):
    with pytest.raises(CapFailure) as exc:
        form_cap(segs)
    assert reason in exc.value.reason


def test_x_crossing_is_a_cap_but_not_good():
    cap = form_cap(X)
    assert cap.vertices == (P(2, 0),)
    A = arr.build(X)
    assert not is_good(cap, A)


def test_closed_triangle_is_good():
    segs = X + [Segment(P(0, -2), P(4, -2))]
    A = arr.build(segs)
    f = good_face(form_cap(X), A)
    assert f is not None and A.faces[f].bounded


def test_transversal_breaks_goodness():
    segs = X + [Segment(P(0, -2), P(4, -2)), Segment(P(2, -3), P(2, 0))]
    A = arr.build(segs)
    assert not is_good(X, A)


def test_single_edge_is_vacuously_good():
    A = arr.build(X)
    assert is_good([X[0]], A)
    with pytest.raises(ValueError):
        is_good([Segment(P(9, 9), P(10, 10))], A)


@given(st.integers(2, 6), st.integers(2, 6), st.integers(1, 6), st.data())
def test_prefixes_of_level_caps_are_caps(m, n, k, data):
    D = dilated_drawing(m, n, 1, 1, 1, mpq(1, 2 ** k))
    level = data.draw(st.integers(2, m + n - 2)) if m + n > 3 else 1
    edges = level_edges(D, level)
    segs = [edge_segment(D, e) for e in edges]
    for cut in range(2, len(segs) + 1):
        cap = form_cap(segs[:cut])
        assert len(cap.vertices) == cut - 1
        assert all(a.x < b.x for a, b in zip(cap.vertices, cap.vertices[1:]))


@pytest.mark.parametrize("m,n", [(3, 3), (5, 5), (4, 6)])
def test_certified_level_caps_are_good(m, n):
    c = certify(m, n)
    A = c.arrangement
    for k in range(1, m + n):
        cap = level_cap(c.drawing, k, A)
        assert is_good(cap, A)
        if len(cap) > 1:
            f = good_face(cap, A)
            assert A.face_complexity(f) >= len(cap)


def test_level_cap_pieces_lie_on_their_segments():
    c = certify(4, 4)
    cap = level_cap(c.drawing, 4, c.arrangement)
    for seg, piece in zip(cap.segments, cap.pieces):
        for p in piece:
            assert _value(seg, p.x) == p.y
    assert cap.polyline[0] == cap.pieces[0].a
