"""Planar subdivision induced by a set of line segments.

The construction is the plain quadratic one: every pair of segments is
intersected exactly, each segment is cut at every vertex it carries, and faces
are traced by walking half-edges with the usual "turn to the clockwise
neighbour" rule.  Half-edges live in flat lists (half-edge ``h`` belongs to
undirected edge ``h >> 1`` and its twin is ``h ^ 1``) because drawings of
``K_{32,32}`` produce about half a million edges.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .geom import HALF, Point, Segment, mpq, on_segment, orient

UNSET = -1


class OverlapError(ValueError):
    pass


@dataclass
class Face:
    id: int
    bounded: bool
    cycles: list[list[int]]           # half-edge cycles; cycles[0] is the outer one for bounded faces
    segments: frozenset[int] = frozenset()

    @property
    def complexity(self) -> int:
        return len(self.segments)


def _direction_key(dx: mpq, dy: mpq) -> tuple:
    # sortable key giving counterclockwise angle order starting at angle 0
    if dy == 0:
        return (0, 0, 0) if dx > 0 else (1, 0, 0)
    return (0 if dy > 0 else 1, 1, -dx / dy)


@dataclass
class Arrangement:
    segments: list[Segment]
    vertices: list[Point] = field(default_factory=list)
    vertex_index: dict = field(default_factory=dict)
    edge_seg: list[int] = field(default_factory=list)
    he_origin: list[int] = field(default_factory=list)
    he_next: list[int] = field(default_factory=list)
    he_face: list[int] = field(default_factory=list)
    seg_edges: list[list[int]] = field(default_factory=list)   # per segment, edge ids ordered from a to b
    seg_forward: list[bool] = field(default_factory=list)      # is a < b lexicographically
    out: list[list[int]] = field(default_factory=list)         # per vertex, outgoing half-edges in ccw order
    faces: list[Face] = field(default_factory=list)
    unbounded: int = UNSET
    components: int = 0

    # ---- basic counts -------------------------------------------------
    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edge_seg)

    @property
    def bounded_faces(self) -> list[Face]:
        return [f for f in self.faces if f.bounded]

    def dest(self, h: int) -> int:
        return self.he_origin[h ^ 1]

    def he_segment(self, h: int) -> Segment:
        return Segment(self.vertices[self.he_origin[h]], self.vertices[self.he_origin[h ^ 1]])

    def edge_midpoint(self, e: int) -> Point:
        u = self.vertices[self.he_origin[2 * e]]
        v = self.vertices[self.he_origin[2 * e + 1]]
        return Point((u[0] + v[0]) * HALF, (u[1] + v[1]) * HALF)

    def edge_faces(self, e: int) -> tuple[int, int]:
        return self.he_face[2 * e], self.he_face[2 * e + 1]

    def segment_faces(self, s: int) -> set[int]:
        hf = self.he_face
        out: set[int] = set()
        for e in self.seg_edges[s]:
            out.add(hf[2 * e])
            out.add(hf[2 * e + 1])
        return out

    def vertex_faces(self, v: int) -> set[int]:
        return {self.he_face[h] for h in self.out[v]}

    def face_edges_of_segment(self, face: int, s: int) -> list[int]:
        """Subdivision edges of segment ``s`` on the boundary of ``face``."""
        hf = self.he_face
        return [e for e in self.seg_edges[s] if hf[2 * e] == face or hf[2 * e + 1] == face]

    def face_boundary_points(self, face: int) -> list[list[Point]]:
        f = self.faces[face]
        return [[self.vertices[self.he_origin[h]] for h in cyc] for cyc in f.cycles]

    # ---- queries --------------------------------------------------------
    def locate(self, p: Point) -> int:
        """Face containing ``p``; ``p`` must not lie on any segment."""
        for s in self.segments:
            if on_segment(p, s):
                raise ValueError("point lies on a segment")
        best, best_area = self.unbounded, None
        for f in self.faces:
            if not f.bounded:
                continue
            pts = [self.vertices[self.he_origin[h]] for h in f.cycles[0]]
            if _point_in_polygon(p, pts):
                area = _area2(pts)
                if best_area is None or area < best_area:
                    best, best_area = f.id, area
        return best

    def face_right_below(self, s: int, p: Point) -> int:
        """Face adjoining segment ``s`` from below at the non-vertex point ``p``."""
        seg = self.segments[s]
        if seg.a[0] == seg.b[0]:
            raise ValueError("vertical segment has no side below")
        if p in self.vertex_index:
            raise ValueError("point is an arrangement vertex")
        if not on_segment(p, seg):
            raise ValueError("point is not on the segment")
        for e in self.seg_edges[s]:
            u = self.vertices[self.he_origin[2 * e]]
            v = self.vertices[self.he_origin[2 * e + 1]]
            if min(u, v) < p < max(u, v):
                # the half-edge running right-to-left has the lower face on its left
                h = 2 * e if u[0] > v[0] else 2 * e + 1
                return self.he_face[h]
        raise ValueError("point not found on segment")  # pragma: no cover

    def face_complexity(self, face: int) -> int:
        return self.faces[face].complexity

    def faceset_complexity(self, faces: Iterable[int]) -> int:
        fs = list(faces)
        if len(set(fs)) != len(fs):
            raise ValueError("duplicated face ids")
        return sum(self.faces[f].complexity for f in fs)

    def common_bounded_faces(self, segs: Sequence[int], hint_vertex: int | None = None) -> list[int]:
        """Bounded faces incident to every segment in ``segs``."""
        need = set(segs)
        if hint_vertex is not None:
            cand = self.vertex_faces(hint_vertex)
        else:
            s0 = min(segs, key=lambda s: len(self.seg_edges[s]))
            cand = self.segment_faces(s0)
        return sorted(f for f in cand if self.faces[f].bounded and need <= self.faces[f].segments)

    def euler_check(self) -> bool:
        bounded = sum(1 for f in self.faces if f.bounded)
        return self.num_vertices - self.num_edges + bounded + 1 == 1 + self.components

    def stats(self) -> dict:
        bounded = [f for f in self.faces if f.bounded]
        return {
            "segments": len(self.segments),
            "vertices": self.num_vertices,
            "edges": self.num_edges,
            "faces": len(self.faces),
            "boundedFaces": len(bounded),
            "maxFaceComplexity": max((f.complexity for f in self.faces), default=0),
            "totalComplexity": sum(f.complexity for f in self.faces),
        }

    def is_convex_face(self, face: int) -> bool:
        f = self.faces[face]
        if not f.bounded or len(f.cycles) != 1:
            return False
        pts = [self.vertices[self.he_origin[h]] for h in f.cycles[0]]
        k = len(pts)
        return all(orient(pts[i - 1], pts[i], pts[(i + 1) % k]) >= 0 for i in range(k))


def _area2(pts: Sequence[Point]) -> mpq:
    total = mpq(0)
    k = len(pts)
    for i in range(k):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % k]
        total += x0 * y1 - x1 * y0
    return total


def _point_in_polygon(p: Point, pts: Sequence[Point]) -> bool:
    # crossing-number test; p is assumed off the boundary
    px, py = p
    inside = False
    k = len(pts)
    for i in range(k):
        (x0, y0), (x1, y1) = pts[i], pts[(i + 1) % k]
        if (y0 > py) != (y1 > py):
            if px < x0 + (py - y0) * (x1 - x0) / (y1 - y0):
                inside = not inside
    return inside


def _pairwise_points(segments: Sequence[Segment]) -> list[list[Point]]:
    n = len(segments)
    on: list[list[Point]] = [[s.a, s.b] for s in segments]
    # line coefficients A x + B y = C and bounding boxes
    lines = []
    for (ax, ay), (bx, by) in segments:
        A = by - ay
        B = ax - bx
        lines.append((A, B, A * ax + B * ay,
                      min(ax, bx), max(ax, bx), min(ay, by), max(ay, by)))
    order = sorted(range(n), key=lambda i: lines[i][3])
    for oi, i in enumerate(order):
        A1, B1, C1, x0, x1, y0, y1 = lines[i]
        (ax, ay), (bx, by) = segments[i]
        for j in order[oi + 1:]:
            A2, B2, C2, u0, u1, v0, v1 = lines[j]
            if u0 > x1:
                break
            if v0 > y1 or v1 < y0:
                continue
            (cx, cy), (dx, dy) = segments[j]
            oc = A1 * cx + B1 * cy - C1
            od = A1 * dx + B1 * dy - C1
            if (oc > 0 and od > 0) or (oc < 0 and od < 0):
                continue
            oa = A2 * ax + B2 * ay - C2
            ob = A2 * bx + B2 * by - C2
            if (oa > 0 and ob > 0) or (oa < 0 and ob < 0):
                continue
            if oc == 0 and od == 0:
                lo = max(min(segments[i]), min(segments[j]))
                hi = min(max(segments[i]), max(segments[j]))
                if lo < hi:
                    raise OverlapError(f"segments {i} and {j} overlap")
                if lo == hi:
                    p = Point(*lo)
                    on[i].append(p)
                    on[j].append(p)
                continue
            if oc == 0:
                p = segments[j].a
            elif od == 0:
                p = segments[j].b
            elif oa == 0:
                p = segments[i].a
            elif ob == 0:
                p = segments[i].b
            else:
                det = A1 * B2 - A2 * B1
                p = Point((C1 * B2 - C2 * B1) / det, (A1 * C2 - A2 * C1) / det)
            on[i].append(p)
            on[j].append(p)
    return on


def build(segments: Iterable[Segment]) -> Arrangement:
    """Build the arrangement of ``segments`` (non-degenerate, pairwise non-overlapping)."""
    segs = [Segment(Point(*s[0]), Point(*s[1])) for s in segments]
    keys = set()
    for i, s in enumerate(segs):
        if s.a == s.b:
            raise ValueError(f"segment {i} is degenerate")
        k = s.key()
        if k in keys:
            raise ValueError(f"segment {i} is duplicated")
        keys.add(k)
    arr = Arrangement(segments=segs)
    on = _pairwise_points(segs)

    vindex = arr.vertex_index
    verts = arr.vertices
    he_origin = arr.he_origin
    edge_seg = arr.edge_seg
    seg_keys = []
    for s in segs:
        dx, dy = s.b[0] - s.a[0], s.b[1] - s.a[1]
        seg_keys.append((_direction_key(dx, dy), _direction_key(-dx, -dy)))
    he_key: list[tuple] = []
    for si, pts in enumerate(on):
        s = segs[si]
        fwd = s.a < s.b
        arr.seg_forward.append(fwd)
        ups = sorted(set(pts), reverse=not fwd)
        ids = []
        for p in ups:
            v = vindex.get(p)
            if v is None:
                v = len(verts)
                vindex[p] = v
                verts.append(p)
            ids.append(v)
        kf, kb = seg_keys[si]
        elist = []
        for u, v in zip(ids, ids[1:]):
            e = len(edge_seg)
            edge_seg.append(si)
            he_origin.append(u)
            he_origin.append(v)
            he_key.append(kf)
            he_key.append(kb)
            elist.append(e)
        arr.seg_edges.append(elist)

    nv = len(verts)
    out: list[list[int]] = [[] for _ in range(nv)]
    for h, v in enumerate(he_origin):
        out[v].append(h)
    pos = [0] * len(he_origin)
    for lst in out:
        lst.sort(key=he_key.__getitem__)
        for i, h in enumerate(lst):
            pos[h] = i
    arr.out = out
    nh = len(he_origin)
    he_next = [0] * nh
    for h in range(nh):
        t = h ^ 1
        lst = out[he_origin[t]]
        he_next[h] = lst[pos[t] - 1]
    arr.he_next = he_next

    # components (union-find over vertices)
    parent = list(range(nv))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in range(len(edge_seg)):
        a, b = find(he_origin[2 * e]), find(he_origin[2 * e + 1])
        if a != b:
            parent[a] = b
    comp_of = [find(v) for v in range(nv)]
    roots = sorted(set(comp_of))
    arr.components = len(roots)

    # trace cycles
    cycle_of = [UNSET] * nh
    cycles: list[list[int]] = []
    for h in range(nh):
        if cycle_of[h] != UNSET:
            continue
        cyc = []
        g = h
        cid = len(cycles)
        while cycle_of[g] == UNSET:
            cycle_of[g] = cid
            cyc.append(g)
            g = he_next[g]
        cycles.append(cyc)
    areas = [_area2([verts[he_origin[h]] for h in c]) for c in cycles]

    faces: list[Face] = []
    face_of_cycle = [UNSET] * len(cycles)
    for cid, c in enumerate(cycles):
        if areas[cid] > 0:
            face_of_cycle[cid] = len(faces)
            faces.append(Face(id=len(faces), bounded=True, cycles=[c]))
    unb = Face(id=len(faces), bounded=False, cycles=[])
    faces.append(unb)
    arr.unbounded = unb.id

    holes = [cid for cid in range(len(cycles)) if areas[cid] <= 0]
    if arr.components <= 1:
        for cid in holes:
            face_of_cycle[cid] = unb.id
            unb.cycles.append(cycles[cid])
    else:
        bounded_cycles = [cid for cid in range(len(cycles)) if areas[cid] > 0]
        for cid in holes:
            c = cycles[cid]
            root = comp_of[he_origin[c[0]]]
            probe = verts[he_origin[c[0]]]
            best, best_area = unb.id, None
            for bc in bounded_cycles:
                if comp_of[he_origin[cycles[bc][0]]] == root:
                    continue
                pts = [verts[he_origin[h]] for h in cycles[bc]]
                if _point_in_polygon(probe, pts) and (best_area is None or areas[bc] < best_area):
                    best, best_area = face_of_cycle[bc], areas[bc]
            face_of_cycle[cid] = best
            faces[best].cycles.append(c)

    he_face = [0] * nh
    for h in range(nh):
        he_face[h] = face_of_cycle[cycle_of[h]]
    arr.he_face = he_face
    seg_sets: list[set[int]] = [set() for _ in faces]
    for h in range(nh):
        seg_sets[he_face[h]].add(edge_seg[h >> 1])
    for f in faces:
        f.segments = frozenset(seg_sets[f.id])
    arr.faces = faces
    return arr


__all__ = ["Arrangement", "Face", "build", "OverlapError"]
