"""Medial axis of a simple polygon, with exact clearance along every edge.

Sites are the polygon's edges plus its reflex vertices; convex vertices
are absorbed into their edges.  Between two edge sites the bisector
piece is a line segment, between an edge and a reflex vertex a
parabolic arc, between two reflex vertices a segment of their
perpendicular bisector.  Restricted to the interior and trimmed by
domination these pieces form a finite tree.

Two construction routes feed the same graph type:

* convex polygons: a shrinking-wavefront sweep.  All edge lines move
  inward at unit speed; wavefront vertices trace the skeleton and edge
  collapses are the events.  O(n log n) and robust on the 720-gon
  fixture, where pairwise enumeration would drown in near-parallel
  degeneracies.
* general polygons: direct enumeration.  Candidate graph vertices are
  the points equidistant from a site triple (plus the convex corners);
  candidate edges are maximal pieces of site-pair bisectors between
  consecutive candidates, kept iff a midpoint passes the domination
  test with two genuinely distinct boundary projections.

Edges are split at interior clearance extrema (parabola apices,
closest-approach points of vertex-vertex bisectors), so clearance is
monotone along every stored edge and all threshold queries downstream
reduce to endpoint comparisons.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass

from .errors import DomainError, StructuralError
from .geometry import Point
from .polygon import JordanPolygon

# Normals with |cross| below this are treated as parallel in the
# wavefront; the 720-gon's opposite edges land near 1e-16.
_PARALLEL_EPS = 1e-12


@dataclass(frozen=True, slots=True)
class Site:
    """A polygon edge (as a closed segment) or a reflex vertex."""

    kind: str  # "edge" | "vertex"
    index: int
    a: Point
    b: Point

    @staticmethod
    def edge(i: int, a: Point, b: Point) -> Site:
        return Site("edge", i, a, b)

    @staticmethod
    def vertex(i: int, v: Point) -> Site:
        return Site("vertex", i, v, v)

    @property
    def is_vertex(self) -> bool:
        return self.kind == "vertex"

    def nearest_point(self, p: Point) -> Point:
        if self.kind == "vertex":
            return self.a
        ab = self.b - self.a
        t = (p - self.a).dot(ab) / ab.dot(ab)
        t = 0.0 if t < 0.0 else (1.0 if t > 1.0 else t)
        return self.a + t * ab

    def distance(self, p: Point) -> float:
        return p.dist(self.nearest_point(p))

    def interior_foot(self, p: Point, margin: float) -> bool:
        """Does the nearest point sit strictly inside the segment?

        Vertex sites trivially qualify.  Used to reject bisector pieces
        whose 'projection' merely clamps to a shared endpoint: those are
        Voronoi edges of the site decomposition but not medial (both
        sites realize the distance at one boundary point).
        """
        if self.kind == "vertex":
            return True
        f = self.nearest_point(p)
        return f.dist(self.a) > margin and f.dist(self.b) > margin


@dataclass(frozen=True, slots=True)
class SegmentCurve:
    p0: Point
    p1: Point

    def point(self, t: float) -> Point:
        return Point(self.p0.x + t * (self.p1.x - self.p0.x),
                     self.p0.y + t * (self.p1.y - self.p0.y))

    def tangent(self, t: float) -> Point:
        return (self.p1 - self.p0).unit()

    def length(self) -> float:
        return self.p0.dist(self.p1)

    def sub(self, t0: float, t1: float) -> SegmentCurve:
        return SegmentCurve(self.point(t0), self.point(t1))

    def rev(self) -> SegmentCurve:
        return SegmentCurve(self.p1, self.p0)


@dataclass(frozen=True, slots=True)
class ParabolaCurve:
    """Locus equidistant from a focus and a directrix line.

    Parametrized by the signed directrix offset s from the focus foot:
    the curve point is foot + s*u + ((s² + h²)/2h)*n, where h is the
    focus height and n points from directrix to focus.  The clearance
    there is (s² + h²)/2h, minimal (= h/2) at the apex s = 0.
    """

    foot: Point
    u: Point
    n: Point
    h: float
    s0: float
    s1: float

    def _xy(self, s: float) -> Point:
        d = (s * s + self.h * self.h) / (2.0 * self.h)
        return Point(self.foot.x + s * self.u.x + d * self.n.x,
                     self.foot.y + s * self.u.y + d * self.n.y)

    def _s(self, t: float) -> float:
        return self.s0 + t * (self.s1 - self.s0)

    def point(self, t: float) -> Point:
        return self._xy(self._s(t))

    def tangent(self, t: float) -> Point:
        s = self._s(t)
        d = Point(self.u.x + (s / self.h) * self.n.x,
                  self.u.y + (s / self.h) * self.n.y).unit()
        return d if self.s1 >= self.s0 else -d

    def length(self) -> float:
        def prim(s: float) -> float:
            z = s / self.h
            return 0.5 * self.h * (z * math.sqrt(1.0 + z * z) + math.asinh(z))
        return abs(prim(self.s1) - prim(self.s0))

    def sub(self, t0: float, t1: float) -> ParabolaCurve:
        return ParabolaCurve(self.foot, self.u, self.n, self.h,
                             self._s(t0), self._s(t1))

    def rev(self) -> ParabolaCurve:
        return ParabolaCurve(self.foot, self.u, self.n, self.h,
                             self.s1, self.s0)


Curve = SegmentCurve | ParabolaCurve


@dataclass(frozen=True, slots=True)
class MedialVertex:
    point: Point
    clearance: float


@dataclass(frozen=True, slots=True)
class MedialEdge:
    """Graph edge; curve runs from vertex v0 to v1, clearance monotone."""

    v0: int
    v1: int
    curve: Curve
    site_left: Site   # left of the curve's forward direction
    site_right: Site
    c0: float
    c1: float

    def clearance(self, t: float) -> float:
        return self.site_left.distance(self.curve.point(t))

    def other(self, v: int) -> int:
        return self.v1 if v == self.v0 else self.v0

    def endpoint_param(self, v: int) -> float:
        return 0.0 if v == self.v0 else 1.0

    def tangent_into(self, v: int) -> Point:
        """Unit direction at the endpoint v, pointing into the edge."""
        if v == self.v0:
            return self.curve.tangent(0.0)
        return -self.curve.tangent(1.0)

    def cut_param(self, r: float) -> float:
        """Parameter where clearance == r; requires r between c0 and c1.

        Closed forms per curve/site type (clearance is affine between
        two edge sites, quadratic against a vertex, and (s²+h²)/2h on a
        parabola), with a bisection fallback; clearance is monotone by
        construction so the root is unique.
        """
        t = self._cut_closed(r)
        if t is not None and -1e-9 <= t <= 1.0 + 1e-9:
            return min(1.0, max(0.0, t))
        lo, hi = 0.0, 1.0
        flo = self.clearance(0.0) - r
        if flo == 0.0:
            return 0.0
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            fm = self.clearance(mid) - r
            if (fm > 0.0) == (flo > 0.0):
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)

    def _cut_closed(self, r: float) -> float | None:
        c = self.curve
        if isinstance(c, ParabolaCurve):
            s2 = 2.0 * c.h * r - c.h * c.h
            if s2 < 0.0:
                return None
            s = math.sqrt(s2)
            den = c.s1 - c.s0
            if den == 0.0:
                return None
            cand = [(sg * s - c.s0) / den for sg in (1.0, -1.0)]
            good = [t for t in cand if -1e-9 <= t <= 1.0 + 1e-9]
            return good[0] if len(good) == 1 else None
        if not (self.site_left.is_vertex or self.site_right.is_vertex):
            den = self.c1 - self.c0
            return None if den == 0.0 else (r - self.c0) / den
        v = (self.site_left if self.site_left.is_vertex else self.site_right).a
        d = c.p1 - c.p0
        w = c.p0 - v
        A = d.dot(d)
        B = 2.0 * w.dot(d)
        C = w.dot(w) - r * r
        disc = B * B - 4.0 * A * C
        if disc < 0.0 or A == 0.0:
            return None
        sq = math.sqrt(disc)
        good = [t for t in ((-B - sq) / (2 * A), (-B + sq) / (2 * A))
                if -1e-9 <= t <= 1.0 + 1e-9]
        return good[0] if len(good) == 1 else None


@dataclass
class MedialGraph:
    """Immutable by convention once built; safe to share."""

    polygon: JordanPolygon
    vertices: tuple[MedialVertex, ...]
    edges: tuple[MedialEdge, ...]
    adjacency: tuple[tuple[int, ...], ...]  # edge indices per vertex

    @property
    def inradius(self) -> float:
        return max(v.clearance for v in self.vertices)

    def critical_clearances(self) -> list[float]:
        """Sorted distinct vertex clearances in (0, inradius]."""
        tol = self.polygon.tol()
        vals = sorted(v.clearance for v in self.vertices if v.clearance > tol)
        out: list[float] = []
        for c in vals:
            if not out or c - out[-1] > tol:
                out.append(c)
        return out


def clearance_at(graph: MedialGraph, p: Point) -> float:
    """Distance from an interior point to the boundary, computed
    directly against the polygon (the graph's own consistency oracle)."""
    return graph.polygon.clearance(p)


# ---------------------------------------------------------------------------
# Convex route: shrinking wavefront.

_RawEdge = tuple[Curve, Site, Site]


class _WfVertex:
    __slots__ = ("i", "j", "birth_t", "birth_p", "ax", "ay", "bx", "by")

    def __init__(self, i, j, birth_t, A, B):
        self.i, self.j = i, j
        self.birth_t = birth_t
        self.ax, self.ay = A
        self.bx, self.by = B
        self.birth_p = self.pos(birth_t)

    def pos(self, t: float) -> Point:
        return Point(self.ax + t * self.bx, self.ay + t * self.by)


def _convex_wavefront(poly: JordanPolygon, sites: list[Site]) -> list[_RawEdge]:
    v = poly.vertices
    n = len(v)
    tol = poly.tol()
    dirs = [(v[(i + 1) % n] - v[i]).unit() for i in range(n)]
    nors = [d.perp() for d in dirs]  # interior normals (ccw polygon)
    offs = [nors[i].dot(v[i]) for i in range(n)]

    def solve_vertex(i: int, j: int, t0: float) -> _WfVertex | None:
        ni, nj = nors[i], nors[j]
        det = ni.cross(nj)
        if abs(det) <= _PARALLEL_EPS:
            return None
        # nor_i . x = off_i + t,  nor_j . x = off_j + t
        ax = (offs[i] * nj.y - offs[j] * ni.y) / det
        ay = (ni.x * offs[j] - nj.x * offs[i]) / det
        bx = (nj.y - ni.y) / det
        by = (ni.x - nj.x) / det
        return _WfVertex(i, j, t0, (ax, ay), (bx, by))

    alive = [True] * n
    prv = [(i - 1) % n for i in range(n)]
    nxt = [(i + 1) % n for i in range(n)]
    wv_after: list[_WfVertex | None] = []
    for i in range(n):
        w = solve_vertex(i, nxt[i], 0.0)
        if w is None:
            raise StructuralError("adjacent polygon edges parallel")
        wv_after.append(w)

    def wv_before(i: int) -> _WfVertex:
        w = wv_after[prv[i]]
        assert w is not None
        return w

    raw: list[_RawEdge] = []

    def emit(w: _WfVertex, end: Point) -> None:
        if w.birth_p.dist(end) > tol:
            raw.append((SegmentCurve(w.birth_p, end), sites[w.i], sites[w.j]))

    version = [0] * n
    heap: list[tuple[float, int, int, int]] = []
    seq = itertools.count()

    def push_event(j: int, now: float) -> None:
        L, R = wv_before(j), wv_after[j]
        if L is None or R is None:
            return
        d = dirs[j]
        alpha = (R.ax - L.ax) * d.x + (R.ay - L.ay) * d.y
        beta = (R.bx - L.bx) * d.x + (R.by - L.by) * d.y
        if beta >= -1e-15:
            return  # not shrinking
        t = max(-alpha / beta, now)
        heapq.heappush(heap, (t, next(seq), j, version[j]))

    for j in range(n):
        push_event(j, 0.0)

    def partner(f: int, active: list[int]) -> int:
        for g in active:
            if g != f and nors[f].dot(nors[g]) < -1.0 + 1e-9:
                return g
        raise StructuralError("terminal spine without a parallel partner")

    def finish_parallel(t_star: float, pair: tuple[int, int],
                        X: Point | None) -> None:
        active = []
        i0 = pair[0]
        c = i0
        while True:
            active.append(c)
            c = nxt[c]
            if c == i0:
                break
        pos: dict[tuple[int, int], Point] = {}
        for e in active:
            f = nxt[e]
            if (e, f) == pair and X is not None:
                pos[(e, f)] = X
                continue
            w = wv_after[e]
            assert w is not None
            p = w.pos(t_star)
            pos[(e, f)] = p
            emit(w, p)
        for f in active:
            p1 = pos[(prv[f], f)]
            p2 = pos[(f, nxt[f])]
            if p1.dist(p2) > tol:
                raw.append((SegmentCurve(p1, p2), sites[f],
                            sites[partner(f, active)]))

    m = n
    while m > 2:
        if not heap:
            raise StructuralError("wavefront stalled before collapse")
        t_star, _, j, ver = heapq.heappop(heap)
        if not alive[j] or ver != version[j]:
            continue
        L, R = wv_before(j), wv_after[j]
        X = 0.5 * (L.pos(t_star) + R.pos(t_star))
        emit(L, X)
        emit(R, X)
        alive[j] = False
        i, k = prv[j], nxt[j]
        nxt[i], prv[k] = k, i
        m -= 1
        if m == 2:
            other = wv_after[k]  # between k and i, the far junction
            assert other is not None
            Y = other.pos(t_star)
            emit(other, Y)
            if X.dist(Y) > tol:
                raw.append((SegmentCurve(X, Y), sites[i], sites[k]))
            return raw
        w = solve_vertex(i, k, t_star)
        if w is None:
            finish_parallel(t_star, (i, k), X)
            return raw
        # Anchor the trace at the actual event point to kill fp drift.
        w.birth_p = X
        wv_after[i] = w
        for e in (i, k):
            version[e] += 1
            push_event(e, t_star)
    raise StructuralError("wavefront terminated abnormally")


# ---------------------------------------------------------------------------
# General route: tritangent enumeration with domination trimming.


def _equidistant_point_three_lines(n1, c1, n2, c2, n3, c3) -> Point | None:
    # Signed interior distances equal: (n1-n2).x = c1-c2, (n1-n3).x = c1-c3
    a11, a12 = n1.x - n2.x, n1.y - n2.y
    a21, a22 = n1.x - n3.x, n1.y - n3.y
    det = a11 * a22 - a12 * a21
    if abs(det) <= 1e-14:
        return None
    b1, b2 = c1 - c2, c1 - c3
    return Point((b1 * a22 - b2 * a12) / det, (a11 * b2 - a21 * b1) / det)


def _line_point_equidistant(p0: Point, d: Point, n: Point, c: float,
                            v: Point) -> list[Point]:
    """Points p0 + t d with signed line distance equal to |x - v|."""
    alpha = n.dot(p0) - c
    beta = n.dot(d)
    w = p0 - v
    A = beta * beta - d.dot(d)
    B = 2.0 * (alpha * beta - w.dot(d))
    C = alpha * alpha - w.dot(w)
    out = []
    if abs(A) <= 1e-14:
        if abs(B) > 1e-14:
            out.append(-C / B)
    else:
        disc = B * B - 4.0 * A * C
        mag = B * B + abs(4.0 * A * C)
        if abs(disc) <= 1e-12 * mag:
            # Tangency: fp noise would either split the double root by
            # ~sqrt(eps) or lose it entirely when disc dips negative.
            out.append(-B / (2.0 * A))
        elif disc > 0.0:
            sq = math.sqrt(disc)
            out.extend(((-B - sq) / (2.0 * A), (-B + sq) / (2.0 * A)))
    return [p0 + t * d for t in out]


def _circumcenter(a: Point, b: Point, c: Point) -> Point | None:
    d = 2.0 * ((b - a).cross(c - a))
    if abs(d) <= 1e-14:
        return None
    ux = ((b.x - a.x) * (b.x + a.x) + (b.y - a.y) * (b.y + a.y))
    vx = ((c.x - a.x) * (c.x + a.x) + (c.y - a.y) * (c.y + a.y))
    # Standard two-chord construction.
    cx = ((b.y - a.y) * vx - (c.y - a.y) * ux) / -d
    cy = ((b.x - a.x) * vx - (c.x - a.x) * ux) / d
    return Point(cx, cy)


class _PairBisector:
    """One branch of the bisector of a site pair, with a 1-d parameter."""

    def __init__(self, curve_kind: str, **kw):
        self.kind = curve_kind
        self.kw = kw

    def param_of(self, p: Point) -> float:
        if self.kind == "line":
            return self.kw["d"].dot(p - self.kw["p0"])
        return self.kw["u"].dot(p - self.kw["foot"])  # parabola

    def point_at(self, q: float) -> Point:
        if self.kind == "line":
            return self.kw["p0"] + q * self.kw["d"]
        pb: ParabolaCurve = self.kw["proto"]
        return pb._xy(q)

    def residual(self, p: Point) -> float:
        return p.dist(self.point_at(self.param_of(p)))

    def curve_between(self, q0: float, q1: float) -> Curve:
        if self.kind == "line":
            return SegmentCurve(self.point_at(q0), self.point_at(q1))
        pb: ParabolaCurve = self.kw["proto"]
        return ParabolaCurve(pb.foot, pb.u, pb.n, pb.h, q0, q1)

    def extremum_params(self) -> list[float]:
        if self.kind == "line":
            return self.kw.get("extrema", [])
        return [0.0]  # parabola apex


def _pair_bisectors(s1: Site, s2: Site, scale: float) -> list[_PairBisector]:
    if s1.is_vertex and s2.is_vertex:
        v1, v2 = s1.a, s2.a
        if v1.dist(v2) <= 1e-12 * scale:
            return []
        mid = 0.5 * (v1 + v2)
        d = (v2 - v1).unit().perp()
        # Clearance extremum at the chord midpoint, parameter 0.
        return [_PairBisector("line", p0=mid, d=d, extrema=[0.0])]
    if not s1.is_vertex and not s2.is_vertex:
        n1 = (s1.b - s1.a).unit().perp()
        n2 = (s2.b - s2.a).unit().perp()
        c1, c2 = n1.dot(s1.a), n2.dot(s2.a)
        dn = n1 - n2
        if dn.norm() <= 1e-9:
            return []  # same-facing parallel lines: no interior bisector
        # (n1 - n2).x = c1 - c2; a line with normal dn.
        p0 = dn * ((c1 - c2) / dn.dot(dn))
        return [_PairBisector("line", p0=p0, d=dn.unit().perp())]
    e, v = (s1, s2.a) if s2.is_vertex else (s2, s1.a)
    if v.dist(e.a) <= 1e-12 * scale or v.dist(e.b) <= 1e-12 * scale:
        return []  # vertex is the edge's own endpoint
    ne = (e.b - e.a).unit().perp()
    ce = ne.dot(e.a)
    h = ne.dot(v) - ce
    if abs(h) <= 1e-9 * scale:
        return []  # focus on the directrix: degenerate
    n = ne if h > 0 else -ne
    h = abs(h)
    foot = v - h * n
    proto = ParabolaCurve(foot, n.perp(), n, h, 0.0, 1.0)
    return [_PairBisector("parabola", foot=foot, u=n.perp(), proto=proto)]


def _tritangent(poly: JordanPolygon, sites: list[Site]) -> list[_RawEdge]:
    scale = poly.scale()
    tol = 1e-9 * scale
    verts = poly.vertices
    n = len(verts)
    reflex = poly.is_reflex()

    # Candidate graph vertices: convex corners + all triple-equidistant
    # interior points.
    cands: list[Point] = [verts[i] for i in range(n) if not reflex[i]]
    lines = {}
    for s in sites:
        if not s.is_vertex:
            nn = (s.b - s.a).unit().perp()
            lines[s.index] = (nn, nn.dot(s.a))

    def consider(p: Point | None, trio) -> None:
        if p is None:
            return
        if not poly.contains_point(p, tol):
            return
        cl = poly.boundary_distance(p)
        if cl <= tol:
            return
        if max(abs(s.distance(p) - cl) for s in trio) > 4.0 * tol:
            return
        cands.append(p)

    for trio in itertools.combinations(sites, 3):
        kinds = sorted(s.kind for s in trio)
        es = [s for s in trio if not s.is_vertex]
        vs = [s for s in trio if s.is_vertex]
        if kinds == ["edge", "edge", "edge"]:
            (n1, c1), (n2, c2), (n3, c3) = (lines[s.index] for s in es)
            consider(_equidistant_point_three_lines(n1, c1, n2, c2, n3, c3), trio)
        elif kinds == ["edge", "edge", "vertex"]:
            for b in _pair_bisectors(es[0], es[1], scale):
                if b.kind != "line":
                    continue
                ne, ce = lines[es[0].index]
                for p in _line_point_equidistant(b.kw["p0"], b.kw["d"],
                                                 ne, ce, vs[0].a):
                    consider(p, trio)
        elif kinds == ["edge", "vertex", "vertex"]:
            v1, v2 = vs[0].a, vs[1].a
            if v1.dist(v2) <= tol:
                continue
            mid = 0.5 * (v1 + v2)
            d = (v2 - v1).unit().perp()
            ne, ce = lines[es[0].index]
            for p in _line_point_equidistant(mid, d, ne, ce, v1):
                consider(p, trio)
        else:
            consider(_circumcenter(vs[0].a, vs[1].a, vs[2].a), trio)

    # Tangency roots arrive split by ~sqrt(eps); pull them back together
    # before they can seed near-duplicate graph vertices.
    labels = _cluster_points(cands, 1e-6 * scale)
    groups: dict[int, list[Point]] = {}
    for p, lab in zip(cands, labels):
        groups.setdefault(lab, []).append(p)
    cands = [Point(sum(p.x for p in g) / len(g), sum(p.y for p in g) / len(g))
             for g in groups.values()]

    raw: list[_RawEdge] = []
    foot_margin = 1e-9 * scale
    for s1, s2 in itertools.combinations(sites, 2):
        for branch in _pair_bisectors(s1, s2, scale):
            params: list[float] = []
            for p in cands:
                if abs(s1.distance(p) - s2.distance(p)) > 4.0 * tol:
                    continue
                if branch.residual(p) > 10.0 * tol:
                    continue
                params.append(branch.param_of(p))
            params.sort()
            accepted: list[tuple[float, float]] = []
            for qa, qb in zip(params, params[1:]):
                if qb - qa <= 2.0 * tol:
                    continue
                m = branch.point_at(0.5 * (qa + qb))
                if not poly.contains_point(m, tol):
                    continue
                d1, d2 = s1.distance(m), s2.distance(m)
                if abs(d1 - d2) > 4.0 * tol:
                    continue
                if d1 > poly.boundary_distance(m) + 4.0 * tol:
                    continue
                if not (s1.interior_foot(m, foot_margin)
                        and s2.interior_foot(m, foot_margin)):
                    continue
                w1, w2 = s1.nearest_point(m), s2.nearest_point(m)
                if w1.dist(w2) <= 1e-7 * scale:
                    continue  # single boundary projection: not medial
                accepted.append((qa, qb))
            if not accepted:
                continue
            # A candidate in the middle of a pair's true edge (a stray
            # equidistant point from some clamped trio) must not become
            # a graph vertex: fuse runs of adjacent accepted intervals,
            # then re-split only at strict clearance extrema.
            runs: list[list[float]] = [list(accepted[0])]
            for qa, qb in accepted[1:]:
                if qa == runs[-1][1]:
                    runs[-1][1] = qb
                else:
                    runs.append([qa, qb])
            extrema = branch.extremum_params()
            for a, b in runs:
                cuts = [a] + [q for q in extrema if a + tol < q < b - tol] + [b]
                for x0, x1 in zip(cuts, cuts[1:]):
                    raw.append((branch.curve_between(x0, x1), s1, s2))
    return raw


# ---------------------------------------------------------------------------
# Assembly shared by both routes.


def _cluster_points(points: list[Point], snap: float) -> list[int]:
    """Union points within snap distance; returns cluster id per point."""
    order = sorted(range(len(points)), key=lambda i: points[i].x)
    parent = list(range(len(points)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a in range(len(order)):
        i = order[a]
        for b in range(a + 1, len(order)):
            j = order[b]
            if points[j].x - points[i].x > snap:
                break
            if points[i].dist(points[j]) <= snap:
                parent[find(i)] = find(j)
    return [find(i) for i in range(len(points))]


def _assemble(poly: JordanPolygon, raw: list[_RawEdge]) -> MedialGraph:
    scale = poly.scale()
    snap = 1e-8 * scale
    tol = poly.tol()

    endpoints: list[Point] = []
    for curve, _, _ in raw:
        endpoints.append(curve.point(0.0))
        endpoints.append(curve.point(1.0))
    labels = _cluster_points(endpoints, snap)
    reps: dict[int, list[Point]] = {}
    for p, lab in zip(endpoints, labels):
        reps.setdefault(lab, []).append(p)
    centroid = {
        lab: Point(sum(p.x for p in ps) / len(ps), sum(p.y for p in ps) / len(ps))
        for lab, ps in reps.items()
    }
    index_of: dict[int, int] = {}
    vertices: list[MedialVertex] = []
    for lab, c in centroid.items():
        index_of[lab] = len(vertices)
        clearance = poly.boundary_distance(c)
        vertices.append(MedialVertex(c, clearance))

    edges: list[MedialEdge] = []
    seen: dict[tuple, bool] = {}
    for k, (curve, sa, sb) in enumerate(raw):
        va = index_of[labels[2 * k]]
        vb = index_of[labels[2 * k + 1]]
        if va == vb:
            if curve.length() > 4.0 * snap:
                raise StructuralError("medial edge loops back to its vertex")
            continue
        mid = curve.point(0.5)
        key = (min(va, vb), max(va, vb),
               round(mid.x / snap), round(mid.y / snap))
        if key in seen:
            continue
        seen[key] = True
        tangent = curve.tangent(0.5)
        ca = tangent.cross(sa.nearest_point(mid) - mid)
        cb = tangent.cross(sb.nearest_point(mid) - mid)
        if ca * cb >= 0.0:
            raise StructuralError("medial edge sites on the same side")
        left, right = (sa, sb) if ca > 0.0 else (sb, sa)
        c0, c1 = vertices[va].clearance, vertices[vb].clearance
        cm = left.distance(mid)
        if not (min(c0, c1) - 10 * tol <= cm <= max(c0, c1) + 10 * tol):
            raise StructuralError(
                f"clearance not monotone on a medial edge ({c0}, {cm}, {c1})")
        edges.append(MedialEdge(va, vb, curve, left, right, c0, c1))

    adj: list[list[int]] = [[] for _ in vertices]
    for ei, e in enumerate(edges):
        adj[e.v0].append(ei)
        adj[e.v1].append(ei)

    if len(edges) != len(vertices) - 1:
        raise StructuralError(
            f"medial graph not a tree: {len(vertices)} vertices, {len(edges)} edges")
    seen_v = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for ei in adj[v]:
            w = edges[ei].other(v)
            if w not in seen_v:
                seen_v.add(w)
                stack.append(w)
    if len(seen_v) != len(vertices):
        raise StructuralError("medial graph disconnected")

    return MedialGraph(poly, tuple(vertices), tuple(edges),
                       tuple(tuple(a) for a in adj))


def build_medial(polygon: JordanPolygon) -> MedialGraph:
    verts = polygon.vertices
    n = len(verts)
    sites = [Site.edge(i, verts[i], verts[(i + 1) % n]) for i in range(n)]
    if polygon.is_convex():
        raw = _convex_wavefront(polygon, sites)
    else:
        reflex = polygon.is_reflex()
        sites += [Site.vertex(i, verts[i]) for i in range(n) if reflex[i]]
        raw = _tritangent(polygon, sites)
    return _assemble(polygon, raw)
