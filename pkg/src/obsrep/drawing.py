"""Regular and dilated bipartite drawings of K_{m,n}, and the certified search
for a dilation small enough that every concurrent family becomes a good cap."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import gmpy2

from . import arrangement as arrmod
from .caps import CapFailure, form_cap, good_face
from .geom import HALF, Point, Q, ScalarLike, Segment, mpq, sqdist

log = logging.getLogger(__name__)

EdgeId = tuple[int, int]      # (i, j): the edge p_i q_j, 1-based


@dataclass(frozen=True)
class BipartiteDrawing:
    m: int
    n: int
    w: mpq
    P: tuple[Point, ...]
    Q: tuple[Point, ...]
    epsilon: mpq | None = None

    def __post_init__(self):
        if len(self.P) != self.m or len(self.Q) != self.n:
            raise ValueError("column sizes do not match m, n")
        if self.w <= 0:
            raise ValueError("width must be positive")
        if any(p.x != self.P[0].x for p in self.P) or any(q.x != self.Q[0].x for q in self.Q):
            raise ValueError("columns must be vertical")
        for col in (self.P, self.Q):
            if any(a.y >= b.y for a, b in zip(col, col[1:])):
                raise ValueError("column y-coordinates must increase")

    @property
    def d(self) -> list[mpq]:
        return [b.y - a.y for a, b in zip(self.P, self.P[1:])]

    @property
    def h(self) -> list[mpq]:
        return [b.y - a.y for a, b in zip(self.Q, self.Q[1:])]

    @property
    def d1(self) -> mpq:
        return self.d[0] if self.m > 1 else self._step_hint[0]

    @property
    def h1(self) -> mpq:
        return self.h[0] if self.n > 1 else self._step_hint[1]

    # steps for one-point columns are not recoverable from the points
    _step_hint: tuple = field(default=(mpq(1), mpq(1)), compare=False, repr=False)

    def is_dilated(self, eps: mpq) -> bool:
        for steps in (self.d, self.h):
            if any(a >= b for a, b in zip(steps, steps[1:])):
                return False
            if steps and not steps[-1] < (1 + eps) * steps[0]:
                return False
        return True

    def segments(self) -> list[Segment]:
        return [Segment(p, q) for p in self.P for q in self.Q]

    def edge_index(self, e: EdgeId) -> int:
        i, j = e
        return (i - 1) * self.n + (j - 1)


def edge_segment(D: BipartiteDrawing, e: EdgeId) -> Segment:
    i, j = e
    return Segment(D.P[i - 1], D.Q[j - 1])


def _check_positive(**kw):
    for k, v in kw.items():
        if v <= 0:
            raise ValueError(f"{k} must be positive")


def _column(x: mpq, steps: Sequence[mpq]) -> tuple[Point, ...]:
    ys = [mpq(0)]
    for s in steps:
        ys.append(ys[-1] + s)
    return tuple(Point(x, y) for y in ys)


def regular_drawing(m: int, n: int, w: ScalarLike = 1, d1: ScalarLike = 1, h1: ScalarLike = 1) -> BipartiteDrawing:
    w, d1, h1 = Q(w), Q(d1), Q(h1)
    _check_positive(m=m, n=n, w=w, d1=d1, h1=h1)
    return BipartiteDrawing(m, n, w, _column(mpq(0), [d1] * (m - 1)), _column(w, [h1] * (n - 1)),
                            _step_hint=(d1, h1))


def dilation_steps(count: int, first: mpq, eps: mpq) -> list[mpq]:
    """Linear ramp first*(1 + eps*(i-1)/count) for i = 1..count."""
    if count <= 0:
        return []
    return [first * (1 + eps * mpq(i, count)) for i in range(count)]


def dilated_drawing(m: int, n: int, w: ScalarLike, d1: ScalarLike, h1: ScalarLike,
                    eps: ScalarLike) -> BipartiteDrawing:
    w, d1, h1, eps = Q(w), Q(d1), Q(h1), Q(eps)
    _check_positive(m=m, n=n, w=w, d1=d1, h1=h1, eps=eps)
    return BipartiteDrawing(m, n, w, _column(mpq(0), dilation_steps(m - 1, d1, eps)),
                            _column(w, dilation_steps(n - 1, h1, eps)), epsilon=eps,
                            _step_hint=(d1, h1))


def level_sizes(m: int, n: int) -> list[int]:
    return [min(k, m, n, m + n - k) for k in range(1, m + n)]


def level_edges(D: BipartiteDrawing, k: int) -> list[EdgeId]:
    """Edges p_i q_j with i + j = k + 1, by strictly decreasing slope (increasing i)."""
    m, n = D.m, D.n
    if not 1 <= k <= m + n - 1:
        raise ValueError(f"level {k} out of range 1..{m + n - 1}")
    return [(i, k + 1 - i) for i in range(max(1, k + 1 - n), min(m, k) + 1)]


def is_uniformly_crossing(D: BipartiteDrawing | None, edges: Sequence[EdgeId]) -> bool:
    if len(edges) < 2:
        raise ValueError("need at least two edges")
    di = edges[1][0] - edges[0][0]
    dj = edges[1][1] - edges[0][1]
    if di <= 0 or dj >= 0:
        return False
    return all(b[0] - a[0] == di and b[1] - a[1] == dj for a, b in zip(edges, edges[1:]))


def regularize(D: BipartiteDrawing) -> BipartiteDrawing:
    return regular_drawing(D.m, D.n, D.w, D.d1, D.h1)


def _cross(a: mpq, b: mpq, a2: mpq, b2: mpq, w: mpq) -> Point:
    # crossing of (0,a)-(w,b) with (0,a2)-(w,b2); caller ensures they cross
    t = (a2 - a) / ((b - a) - (b2 - a2))
    return Point(w * t, a + (b - a) * t)


def meeting_point(D: BipartiteDrawing, edges: Sequence[EdgeId]) -> Point:
    if not is_uniformly_crossing(D, edges):
        raise ValueError("tuple is not uniformly crossing")
    R = regularize(D)
    (i1, j1), (i2, j2) = edges[0], edges[1]
    return _cross(R.P[i1 - 1].y, R.Q[j1 - 1].y, R.P[i2 - 1].y, R.Q[j2 - 1].y, R.w)


def crossing_pairs(m: int, n: int):
    """Pairs of edges that cross in every drawing with increasing columns."""
    for i in range(1, m + 1):
        for i2 in range(i + 1, m + 1):
            for j in range(2, n + 1):
                for j2 in range(1, j):
                    yield (i, j), (i2, j2)


@lru_cache(maxsize=32)
def _regular_pairs(m: int, n: int, w: mpq, d1: mpq, h1: mpq):
    R = regular_drawing(m, n, w, d1, h1)
    pairs = []
    families: dict[Point, set[EdgeId]] = {}
    for e, f in crossing_pairs(m, n):
        p = _cross(R.P[e[0] - 1].y, R.Q[e[1] - 1].y, R.P[f[0] - 1].y, R.Q[f[1] - 1].y, w)
        pairs.append((e, f, p))
        fam = families.get(p)
        if fam is None:
            families[p] = {e, f}
        else:
            fam.add(e)
            fam.add(f)
    # the highest vertices move the most under dilation; test them first
    pairs.sort(key=lambda t: -(t[0][1] + t[1][0]))
    fams = {p: tuple(sorted(s)) for p, s in families.items()}
    return pairs, fams


def intersection_families(D: BipartiteDrawing) -> dict[Point, tuple[EdgeId, ...]]:
    """Maximal concurrent families of the regularization, keyed by meeting point."""
    return _regular_pairs(D.m, D.n, D.w, D.d1, D.h1)[1]


def _sqrt_floor(q: mpq, bits: int = 48) -> mpq:
    """Exact sqrt when q is a rational square, otherwise the best lower
    approximation with a power-of-two denominator."""
    num, den = q.numerator, q.denominator
    rn, en = gmpy2.iroot(num, 2)
    rd, ed = gmpy2.iroot(den, 2)
    if en and ed:
        return mpq(rn, rd)
    scale = max(0, bits - (int(gmpy2.bit_length(num)) - int(gmpy2.bit_length(den))) // 2)
    return mpq(gmpy2.isqrt(num * 4 ** scale // den), 2 ** scale)


def min_gap_sq(points: Sequence[Point]) -> mpq:
    """Exact minimum squared distance among distinct points (grid bucketing)."""
    pts = sorted(set(points))
    if len(pts) < 2:
        raise ValueError("fewer than two intersection points")
    # any pair gives an upper bound; consecutive points in sorted order are cheap candidates
    best = min(sqdist(a, b) for a, b in zip(pts, pts[1:]))
    a, b = min(zip(pts, pts[1:]), key=lambda ab: sqdist(*ab))
    cell = abs(a.x - b.x) + abs(a.y - b.y)
    grid: dict[tuple[int, int], list[Point]] = {}
    for p in pts:
        grid.setdefault((math.floor(p.x / cell), math.floor(p.y / cell)), []).append(p)
    for (cx, cy), bucket in grid.items():
        for dx in (0, 1):
            for dy in (-1, 0, 1):
                if dx == 0 and dy == -1:
                    continue
                other = bucket if (dx, dy) == (0, 0) else grid.get((cx + dx, cy + dy))
                if not other:
                    continue
                for i, p in enumerate(bucket):
                    rest = other[i + 1:] if other is bucket else other
                    for q in rest:
                        d = sqdist(p, q)
                        if d < best:
                            best = d
    return best


def min_intersection_gap(D: BipartiteDrawing, allow_single: bool = False) -> mpq | None:
    """Half the minimum distance between distinct intersection points of the
    (regular) drawing, rounded down to a rational when irrational."""
    fams = intersection_families(D)
    if len(fams) < 2:
        if allow_single:
            return None
        raise ValueError("the drawing has fewer than two intersection points")
    return _sqrt_floor(min_gap_sq(list(fams)) / 4)


@dataclass(frozen=True)
class DilationCertificate:
    epsilon: mpq
    delta: mpq
    checks: tuple[str, ...]
    halvings: int = 0


@dataclass
class Certified:
    drawing: BipartiteDrawing
    certificate: DilationCertificate
    arrangement: "arrmod.Arrangement"
    family_faces: dict[Point, tuple[tuple[EdgeId, ...], int]]


class CertificationError(RuntimeError):
    pass


def _proximity_ok(D: BipartiteDrawing, pairs, delta_sq: mpq) -> bool:
    P, Qc, w = D.P, D.Q, D.w
    for e, f, s in pairs:
        r = _cross(P[e[0] - 1].y, Qc[e[1] - 1].y, P[f[0] - 1].y, Qc[f[1] - 1].y, w)
        if not sqdist(r, s) < delta_sq:
            return False
    return True


def _caps_good(D: BipartiteDrawing, fams, A) -> dict | None:
    out = {}
    for s, fam in fams.items():
        segs = [edge_segment(D, e) for e in fam]
        try:
            cap = form_cap(segs)
        except CapFailure as exc:
            log.debug("family at %s is not a cap: %s", s, exc.reason)
            return None
        f = good_face(cap, A)
        if f is None:
            return None
        out[s] = (fam, f)
    return out


@lru_cache(maxsize=16)
def certify(m: int, n: int, w: mpq = mpq(1), d1: mpq = mpq(1), h1: mpq = mpq(1),
            delta: mpq | None = None, max_halvings: int = 80) -> Certified:
    w, d1, h1 = Q(w), Q(d1), Q(h1)
    _check_positive(m=m, n=n, w=w, d1=d1, h1=h1)
    pairs, fams = _regular_pairs(m, n, w, d1, h1)
    gap = min_intersection_gap(regular_drawing(m, n, w, d1, h1), allow_single=True)
    if gap is None:
        gap = Q(delta) if delta is not None else w
    elif delta is not None:
        gap = min(gap, Q(delta))
    dsq = gap * gap
    eps = HALF
    for halvings in range(max_halvings):
        D = dilated_drawing(m, n, w, d1, h1, eps)
        if _proximity_ok(D, pairs, dsq):
            A = arrmod.build(D.segments())
            faces = _caps_good(D, fams, A)
            if faces is not None:
                cert = DilationCertificate(eps, gap, ("proximity", "good-caps"), halvings)
                log.info("certified K_{%d,%d} with eps=%s after %d halvings", m, n, eps, halvings)
                return Certified(D, cert, A, faces)
        eps = eps * HALF
    raise CertificationError(f"no certified dilation for K_{{{m},{n}}} within {max_halvings} halvings")


def certify_epsilon(m: int, n: int, w: ScalarLike = 1, d1: ScalarLike = 1, h1: ScalarLike = 1,
                    delta: ScalarLike | None = None) -> tuple[BipartiteDrawing, DilationCertificate]:
    c = certify(m, n, Q(w), Q(d1), Q(h1), None if delta is None else Q(delta))
    return c.drawing, c.certificate


def recheck(D: BipartiteDrawing, cert: DilationCertificate) -> bool:
    """Re-run both certificate checks on ``D``."""
    pairs, fams = _regular_pairs(D.m, D.n, D.w, D.d1, D.h1)
    if not _proximity_ok(D, pairs, cert.delta * cert.delta):
        return False
    return _caps_good(D, fams, arrmod.build(D.segments())) is not None


__all__ = [
    "BipartiteDrawing", "EdgeId", "DilationCertificate", "Certified", "CertificationError",
    "regular_drawing", "dilated_drawing", "dilation_steps", "level_edges", "level_sizes",
    "is_uniformly_crossing", "regularize", "meeting_point", "min_intersection_gap",
    "min_gap_sq", "certify", "certify_epsilon", "recheck", "edge_segment",
    "intersection_families", "crossing_pairs",
]
