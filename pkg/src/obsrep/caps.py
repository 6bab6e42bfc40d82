"""Lower envelopes, caps and good caps."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .arrangement import Arrangement
from .geom import HALF, Point, Segment, mpq, seg_intersection


class CapFailure(ValueError):
    """Raised by :func:`form_cap`; ``reason`` names the first violated condition."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


# A piece of an envelope: left point, right point, index of the supplying segment.
Piece = tuple[Point, Point, int]


def _fn(s: Segment):
    (ax, ay), (bx, by) = s
    if ax == bx:
        raise ValueError("vertical segment in lower envelope")
    if ax > bx:
        ax, ay, bx, by = bx, by, ax, ay
    k = (by - ay) / (bx - ax)
    return ax, bx, ay - k * ax, k      # x-range, intercept, slope


def lower_envelope(segments: Sequence[Segment]) -> list[list[Piece]]:
    """Connected components of the graph of the pointwise minimum."""
    if not segments:
        return []
    fns = [_fn(s) for s in segments]
    xs = set()
    for lo, hi, _, _ in fns:
        xs.add(lo)
        xs.add(hi)
    for i in range(len(segments)):
        for j in range(i + 1, len(segments)):
            p = seg_intersection(segments[i], segments[j])
            if isinstance(p, tuple) and not isinstance(p, Segment):
                xs.add(p[0])
    xs = sorted(xs)
    comps: list[list[Piece]] = []
    cur: list[Piece] = []
    for x0, x1 in zip(xs, xs[1:]):
        xm = (x0 + x1) * HALF
        best, bval = -1, None
        for i, (lo, hi, c, k) in enumerate(fns):
            if lo <= x0 and x1 <= hi:
                v = c + k * xm
                if bval is None or v < bval:
                    best, bval = i, v
        if best < 0:
            if cur:
                comps.append(cur)
                cur = []
            continue
        _, _, c, k = fns[best]
        left, right = Point(x0, c + k * x0), Point(x1, c + k * x1)
        if cur and cur[-1][1] != left:
            comps.append(cur)
            cur = []
        if cur and cur[-1][2] == best:
            cur[-1] = (cur[-1][0], right, best)
        else:
            cur.append((left, right, best))
    if cur:
        comps.append(cur)
    return comps


@dataclass(frozen=True)
class Cap:
    segments: tuple[Segment, ...]
    vertices: tuple[Point, ...]          # r_1 .. r_{l-1}
    polyline: tuple[Point, ...]          # the envelope component
    pieces: tuple[Segment, ...]          # e_i restricted to the component

    def __len__(self) -> int:
        return len(self.segments)


def _component_value(comp: list[Piece], x: mpq) -> mpq | None:
    for left, right, _ in comp:
        if left[0] <= x <= right[0]:
            if left[0] == right[0]:
                return left[1]
            return left[1] + (right[1] - left[1]) * (x - left[0]) / (right[0] - left[0])
    return None


def form_cap(segments: Sequence[Segment]) -> Cap:
    segs = tuple(Segment(Point(*s[0]), Point(*s[1])) for s in segments)
    if len(segs) < 2:
        raise CapFailure("a cap needs at least two segments")
    for s in segs:
        if s.a[0] == s.b[0]:
            raise CapFailure("vertical segment")
    slopes = [s.slope() for s in segs]
    if any(a <= b for a, b in zip(slopes, slopes[1:])):
        raise CapFailure("slopes not strictly decreasing")
    rs = []
    for s, t in zip(segs, segs[1:]):
        r = seg_intersection(s, t)
        if r is None or isinstance(r, Segment):
            raise CapFailure("consecutive segments do not cross")
        rs.append(r)
    if any(a[0] >= b[0] for a, b in zip(rs, rs[1:])):
        raise CapFailure("vertices not ordered by x")
    for comp in lower_envelope(segs):
        if all(_component_value(comp, r[0]) == r[1] for r in rs):
            break
    else:
        raise CapFailure("vertices not on one envelope component")
    poly = [comp[0][0]] + [p[1] for p in comp]
    pieces = []
    for i in range(len(segs)):
        own = [p for p in comp if p[2] == i]
        if not own:
            raise CapFailure("segment missing from the cap")
        pieces.append(Segment(own[0][0], own[-1][1]))
    return Cap(segs, tuple(rs), tuple(poly), tuple(pieces))


def segment_ids(A: Arrangement, segs: Sequence[Segment]) -> list[int]:
    lookup = getattr(A, "_seg_lookup", None)
    if lookup is None:
        lookup = {s.key(): i for i, s in enumerate(A.segments)}
        A._seg_lookup = lookup
    try:
        return [lookup[Segment(*s).key()] for s in segs]
    except KeyError as exc:
        raise ValueError("cap segment is not a source segment of the arrangement") from exc


def good_face(cap: Cap, A: Arrangement) -> int | None:
    """A bounded face incident to every cap segment, or ``None``."""
    ids = segment_ids(A, cap.segments)
    hint = A.vertex_index.get(cap.vertices[0]) if cap.vertices else None
    if hint is not None:
        found = A.common_bounded_faces(ids, hint_vertex=hint)
        if found:
            return found[0]
    found = A.common_bounded_faces(ids)
    return found[0] if found else None


def is_good(cap: Cap | Sequence[Segment], A: Arrangement) -> bool:
    if not isinstance(cap, Cap):
        segs = list(cap)
        if len(segs) == 1:
            segment_ids(A, segs)
            return True
        cap = form_cap(segs)
    if len(cap.segments) == 1:
        return True
    return good_face(cap, A) is not None


def level_cap(D, k: int, A: Arrangement) -> Cap:
    from .drawing import edge_segment, level_edges
    segs = [edge_segment(D, e) for e in level_edges(D, k)]
    if len(segs) == 1:
        s = segs[0].ordered()
        return Cap((segs[0],), (), (s.a, s.b), (segs[0],))
    return form_cap(segs)


__all__ = ["Cap", "CapFailure", "lower_envelope", "form_cap", "is_good", "good_face", "level_cap", "segment_ids"]
