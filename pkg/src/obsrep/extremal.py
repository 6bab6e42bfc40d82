"""Counting constructions: faces incident to many complete-graph edges, face
families of large complexity around uniform crossings, and the one-obstacle
family of graphs."""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .caps import form_cap
from .construct.bipartite import bipartite_geometry
from .drawing import _cross, certify, edge_segment, intersection_families, regular_drawing
from .geom import ConvexObstacle, Point, Q, ScalarLike, Segment, convex_hull, mpq, no_three_collinear, on_segment
from .model import Graph, ObstacleRepresentation, Pair, Rule

ORIGIN = Point(mpq(0), mpq(0))


# ---------------------------------------------------------------- faces met by many edges

@dataclass
class EOfH:
    n: int
    h: int
    points: tuple[Point, ...]        # vertex placement (left column, then right column)
    levels: list[int]                # level index behind each selected face
    faces: list[int]
    incident: frozenset[Pair]        # complete-graph edges meeting some selected face
    bound: int

    @property
    def count(self) -> int:
        return len(self.incident)


def e_bound(n: int, h: int) -> int:
    """Ceiling of (2hn - h^2 - 1) / 4."""
    return -((h * h + 1 - 2 * h * n) // 4)


def e_of_h(n: int, h: int) -> EOfH:
    if n < 3 or not 0 < h < n:
        raise ValueError("need n >= 3 and 0 < h < n")
    a, b = (n + 1) // 2, n // 2
    geo = bipartite_geometry(a, b)
    K = geo.K
    A = K.A
    levels, faces = [], []
    for i in range(1, h + 1):
        k = b - (h + 1) // 2 + i
        g = geo.levels[k]
        f = g.face
        if f is None:
            sid = K.index[g.pairs[0]]
            cand = [x for x in A.segment_faces(sid) if A.faces[x].bounded]
            f = max(cand, key=lambda x: (A.faces[x].complexity, -x))
        levels.append(k)
        faces.append(f)
    incident = frozenset(K.pairs[s] for f in set(faces) for s in A.faces[f].segments)
    res = EOfH(n, h, geo.points, levels, faces, incident, e_bound(n, h))
    if res.count < res.bound:
        raise AssertionError(f"e({h},{n}) witness has {res.count} < {res.bound} incident edges")
    return res


def claim1_representation(res: EOfH, added: set[Pair]) -> tuple[Graph, ObstacleRepresentation]:
    """Represent the supergraph (K_n minus the incident edges) + ``added`` with at
    most h obstacles, one per selected face."""
    if not added <= res.incident:
        raise ValueError("added edges must be incident to the selected faces")
    geo = bipartite_geometry((res.n + 1) // 2, res.n // 2)
    K = geo.K
    A = K.A
    blocked = res.incident - added
    G = Graph(res.n, [p for p in itertools.combinations(range(res.n), 2) if p not in blocked])
    obstacles, tags, rules = [], [], []
    for f in dict.fromkeys(res.faces):
        chosen = sorted(K.pairs[s] for s in A.faces[f].segments if K.pairs[s] in blocked)
        if chosen:
            obstacles.append(convex_hull(K.piece_midpoint(f, p) for p in chosen))
            tags.append(f"face {f}")
            rules.append(Rule("face", frozenset(chosen)))
    return G, ObstacleRepresentation(res.points, obstacles, tags, rules, {"method": "claim1"})


# ---------------------------------------------------------------- uniform crossings

@dataclass(frozen=True)
class UniformCrossing:
    i: int
    k: int
    location: Point
    family: tuple[tuple[int, int], ...]


def uniform_crossings(n: int, w: ScalarLike = 1, K: int = 2) -> list[UniformCrossing]:
    """Every uniform (i, k)-crossing of the regular K_{n,n}, for coprime i < k <= K."""
    if not 2 <= K <= n / 2:
        raise ValueError("K must satisfy 2 <= K <= n/2")
    w = Q(w)
    R = regular_drawing(n, n, w)
    fams = intersection_families(R)
    ys = [p.y for p in R.P]
    out: list[UniformCrossing] = []
    seen: dict[Point, tuple[int, int]] = {}
    for k in range(2, K + 1):
        for i in range(1, k):
            if math.gcd(i, k) != 1:
                continue
            pts = set()
            for a in range(1, n - i + 1):
                for b in range(max(1, k - i + 1), n + 1):
                    pts.add(_cross(ys[a - 1], ys[b - 1], ys[a + i - 1], ys[b + i - k - 1], w))
            for p in sorted(pts):
                if p.x != w * mpq(i, k):
                    raise AssertionError("uniform crossing off its vertical line")
                if p in seen:
                    raise AssertionError(f"{p} is a crossing for both {seen[p]} and {(i, k)}")
                seen[p] = (i, k)
                out.append(UniformCrossing(i, k, p, fams[p]))
            count = len(pts)
            through = {e for c in out if (c.i, c.k) == (i, k) for e in c.family}
            if count > k * n:
                raise AssertionError(f"{count} uniform ({i},{k})-crossings exceed {k * n}")
            if len(through) < n * n - 2 * i * n:
                raise AssertionError(f"only {len(through)} edges through ({i},{k})-crossings")
    return out


def totient_sum(m: int) -> int:
    if m < 1:
        raise ValueError("m must be positive")
    phi = list(range(m + 1))
    for p in range(2, m + 1):
        if phi[p] == p:
            for q in range(p, m + 1, p):
                phi[q] -= phi[q] // p
    return sum(phi[1:])


def choose_K(n: int, M: int) -> int:
    """The integer nearest to (M/n)^(1/3), compared exactly:
    (K - 1/2)^3 <= M/n < (K + 1/2)^3."""
    r = mpq(M, n)
    K = 0
    while mpq(2 * K + 1, 2) ** 3 <= r:
        K += 1
    return K


@dataclass
class PairStats:
    i: int
    k: int
    crossings: int
    edges_through: int
    complexity: int
    lower_bound: int


@dataclass
class FaceFamilyReport:
    n: int
    M: int
    K: int
    faces: list[int]
    complexity: int
    pairs: list[PairStats] = field(default_factory=list)
    exact_lower_bound: int = 0
    face_bound: mpq = mpq(0)
    reference: float = 0.0          # 3 n^2 K^2 / pi^2 - n K^3, display only
    top_m_complexity: int = 0

    @property
    def count(self) -> int:
        return len(self.faces)

    def to_dict(self) -> dict:
        return {
            "n": self.n, "M": self.M, "K": self.K,
            "faces": self.count,
            "complexity": self.complexity,
            "exactLowerBound": self.exact_lower_bound,
            "faceBound": f"{self.face_bound.numerator}/{self.face_bound.denominator}",
            "reference": self.reference,
            "ratioToReference": self.complexity / self.reference if self.reference > 0 else None,
            "topMComplexity": self.top_m_complexity,
            "pairs": [vars(p) for p in self.pairs],
        }


def thm5_construction(n: int, M: int, K: int | None = None) -> FaceFamilyReport:
    if M < 1:
        raise ValueError("M must be positive")
    if K is None:
        K = choose_K(n, M)
    if not 2 <= K <= n / 2:
        raise ValueError(f"K={K} is outside [2, n/2]; choose a larger n or M")
    cert = certify(n, n)
    D, A = cert.drawing, cert.arrangement
    crossings = uniform_crossings(n, D.w, K)
    face_of: dict[Point, int] = {}
    per_pair: dict[tuple[int, int], list[UniformCrossing]] = {}
    for c in crossings:
        segs = [edge_segment(D, e) for e in c.family]
        cap = form_cap(segs)
        e1 = D.edge_index(c.family[0])
        r1 = cap.vertices[0]
        sub = next(e for e in A.seg_edges[e1]
                   if max(A.vertices[A.he_origin[2 * e]], A.vertices[A.he_origin[2 * e + 1]]) == r1)
        f = A.face_right_below(e1, A.edge_midpoint(sub))
        face = A.faces[f]
        if not face.bounded or not {D.edge_index(e) for e in c.family} <= face.segments:
            raise AssertionError(f"face below the cap at {c.location} is not good")
        face_of[c.location] = f
        per_pair.setdefault((c.i, c.k), []).append(c)
    faces = list(face_of.values())
    if len(set(faces)) != len(faces):
        raise AssertionError("two uniform crossings share a face")
    face_bound = mpq(n * K ** 3, 2)
    if not len(faces) < face_bound:
        raise AssertionError("face family exceeds n K^3 / 2")
    stats = []
    for (i, k), cs in sorted(per_pair.items(), key=lambda t: (t[0][1], t[0][0])):
        cx = A.faceset_complexity(face_of[c.location] for c in cs)
        through = len({e for c in cs for e in c.family})
        lb = n * n - 2 * k * n
        if cx < lb or len(cs) > k * n:
            raise AssertionError(f"pair ({i},{k}) violates its exact bounds")
        stats.append(PairStats(i, k, len(cs), through, cx, lb))
    complexity = A.faceset_complexity(faces)
    top = sorted((f.complexity for f in A.faces if f.bounded), reverse=True)[:M]
    return FaceFamilyReport(
        n, M, K, faces, complexity, stats,
        exact_lower_bound=sum(s.lower_bound for s in stats),
        face_bound=face_bound,
        reference=3 * n * n * K * K / math.pi ** 2 - n * K ** 3,
        top_m_complexity=sum(top),
    )


# ---------------------------------------------------------------- one obstacle, many graphs

def random_matching(n: int, rng: random.Random) -> dict[int, int]:
    """A random bijection from the lower half of the vertices onto the upper half."""
    h = n // 2
    targets = list(range(n - h, n))
    rng.shuffle(targets)
    return dict(zip(range(h), targets))


def single_obstacle_family(n: int, f: Mapping[int, int], seed: int = 0,
                           max_tries: int = 1000) -> ObstacleRepresentation:
    """K_n minus the matching {i, f(i)} with a single point obstacle.

    Vertices are 0-based; ``f`` maps 0..n//2-1 bijectively onto the top n//2
    vertices.  Matched pairs sit on opposite sides of the origin along
    distinct rational directions, so all their segments meet there.
    """
    h = n // 2
    if n < 2 or sorted(f) != list(range(h)) or sorted(f.values()) != list(range(n - h, n)):
        raise ValueError("f must be a bijection from the lower onto the upper half")
    rng = random.Random(seed)
    matched = {(min(i, j), max(i, j)) for i, j in f.items()}
    for _ in range(max_tries):
        pts: list[Point | None] = [None] * n
        slopes = set()
        for i, j in f.items():
            while True:
                a, b = rng.randint(1, 40), rng.randint(-40, 40)
                if mpq(b, a) not in slopes:
                    slopes.add(mpq(b, a))
                    break
            r, s = mpq(rng.randint(8, 24), 8), mpq(rng.randint(8, 24), 8)
            pts[i] = Point(r * a, r * b)
            pts[j] = Point(-s * a, -s * b)
        for v in range(n):
            if pts[v] is None:
                pts[v] = Point(mpq(rng.randint(-60, 60)), mpq(rng.randint(-60, 60)))
        if ORIGIN in pts or len(set(pts)) != n or not no_three_collinear(pts):
            continue
        if any(on_segment(ORIGIN, Segment(pts[u], pts[v]))
               for u, v in itertools.combinations(range(n), 2) if (u, v) not in matched):
            continue
        rule = Rule("fixed", frozenset(matched))
        return ObstacleRepresentation(tuple(pts), [ConvexObstacle((ORIGIN,))], ["O_0"], [rule],
                                      {"method": "g1", "seed": seed})
    raise RuntimeError("could not place the matching around the origin")


def matching_graph(n: int, f: Mapping[int, int]) -> Graph:
    gone = {(min(i, j), max(i, j)) for i, j in f.items()}
    return Graph(n, [p for p in itertools.combinations(range(n), 2) if p not in gone])


__all__ = [
    "EOfH", "e_of_h", "e_bound", "claim1_representation", "UniformCrossing", "uniform_crossings",
    "totient_sum", "choose_K", "PairStats", "FaceFamilyReport", "thm5_construction",
    "single_obstacle_family", "random_matching", "matching_graph",
]
