import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import points, segments
from obsrep import arrangement as arr
from obsrep.drawing import regular_drawing
from obsrep.geom import P, Point, Segment, mpq, seg_intersection
from oracles import slab_faces


def _usable(segs):
    """Non-vertical, pairwise non-overlapping, distinct segments."""
    if any(s.a.x == s.b.x for s in segs):
        return False
    keys = {s.key() for s in segs}
    if len(keys) != len(segs):
        return False
    return not any(isinstance(seg_intersection(s, t), Segment)
                   for i, s in enumerate(segs) for t in segs[i + 1:])


segment_sets = st.lists(segments(), min_size=1, max_size=12).filter(_usable)


def check_against_oracle(segs):
    A = arr.build(segs)
    faces = slab_faces(segs)
    assert len(A.faces) == len(faces)
    hit = set()
    for sample, bounding, bounded in faces:
        f = A.locate(Point(mpq(sample[0].numerator, sample[0].denominator),
                           mpq(sample[1].numerator, sample[1].denominator)))
        assert f not in hit
        hit.add(f)
        assert A.faces[f].bounded == bounded
        assert set(A.faces[f].segments) == bounding
    assert A.euler_check()
    return A


@settings(max_examples=50)
@given(segment_sets)
def test_faces_match_slab_oracle(segs):
    check_against_oracle(segs)


def test_triangle():
    segs = [Segment(P(0, 0), P(4, 1)), Segment(P(4, 1), P(1, 4)), Segment(P(1, 4), P(0, 0))]
    A = arr.build(segs)
    assert A.num_vertices == 3 and A.num_edges == 3
    assert len(A.bounded_faces) == 1
    assert A.locate(P(1, 1)) == A.bounded_faces[0].id
    assert A.locate(P(9, 9)) == A.unbounded
    assert A.is_convex_face(A.bounded_faces[0].id)


def test_crossing_star():
    segs = [Segment(P(-2, 0), P(2, 0)), Segment(P(0, -2), P(0, 2)), Segment(P(-2, -2), P(2, 2))]
    A = arr.build(segs)
    assert A.num_vertices == 7 and A.num_edges == 6
    assert not A.bounded_faces
    assert A.euler_check()


def test_two_components():
    segs = [Segment(P(0, 0), P(1, 0)), Segment(P(5, 5), P(6, 7))]
    A = arr.build(segs)
    assert A.components == 2 and len(A.faces) == 1
    assert A.euler_check()


def test_overlap_rejected():
    with pytest.raises(arr.OverlapError):
        arr.build([Segment(P(0, 0), P(2, 0)), Segment(P(1, 0), P(3, 0))])


def test_locate_on_segment_rejected():
    A = arr.build([Segment(P(0, 0), P(2, 2))])
    with pytest.raises(ValueError):
        A.locate(P(1, 1))


def test_face_right_below():
    segs = [Segment(P(0, 0), P(4, 0)), Segment(P(0, 0), P(2, 2)), Segment(P(2, 2), P(4, 0))]
    A = arr.build(segs)
    inner = A.bounded_faces[0].id
    assert A.face_right_below(1, P(1, 1)) == inner
    assert A.face_right_below(0, P(1, 0)) == A.unbounded
    with pytest.raises(ValueError):
        A.face_right_below(0, P(0, 0))


@pytest.mark.parametrize("m,n", [(2, 2), (3, 3), (3, 4)])
def test_regular_drawing_against_oracle(m, n):
    A = check_against_oracle(regular_drawing(m, n).segments())
    stats = A.stats()
    assert stats["segments"] == m * n
    assert stats["faces"] == len(A.faces)


def test_k33_golden_counts():
    A = arr.build(regular_drawing(3, 3).segments())
    assert A.num_vertices == 13
    assert len(A.bounded_faces) == 12


def test_faceset_complexity_rejects_duplicates():
    A = arr.build(regular_drawing(2, 2).segments())
    f = A.bounded_faces[0].id
    assert A.faceset_complexity([f]) == A.face_complexity(f)
    with pytest.raises(ValueError):
        A.faceset_complexity([f, f])
