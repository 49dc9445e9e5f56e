"""Planar kernel for regions bounded by line segments and circular arcs.

Every shape produced downstream (inner parallel sets, disk sums,
minimizer boundaries) is a closed loop of segments and arcs, so the
kernel restricts itself to that class and gets exact closed forms in
return: areas via Green's theorem with circular-segment corrections,
perimeters as plain sums, containment by crossing parity.

Orientation convention: positively oriented (counterclockwise) loops
bound regions, ``sweep > 0`` means a counterclockwise arc.  Holes are
clockwise loops.  Tolerances are absolute and derived by callers from
``REL_TOL`` times the bounding-box diagonal of the shape at hand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ReachViolationError, StructuralError

TWO_PI = 2.0 * math.pi

# Relative tolerance factors, to be multiplied by a bbox diagonal.
REL_TOL = 1e-9        # coincidence / on-boundary band
REL_TOL_DEGEN = 1e-7  # classification of measure-zero features

# Ray directions tried in order by the parity test.  Angles are
# irrational-ish so axis-aligned fixtures never start degenerate.
_RAY_ANGLES = (0.7853981, 2.1293, 3.9174, 5.0811, 0.33301, 1.7771, 4.5523, 5.9)


def wrap_angle(a: float) -> float:
    """Reduce to [0, 2*pi)."""
    a = math.fmod(a, TWO_PI)
    return a + TWO_PI if a < 0.0 else a


@dataclass(frozen=True, slots=True)
class Point:
    x: float
    y: float

    def __add__(self, o: Point) -> Point:
        return Point(self.x + o.x, self.y + o.y)

    def __sub__(self, o: Point) -> Point:
        return Point(self.x - o.x, self.y - o.y)

    def __mul__(self, s: float) -> Point:
        return Point(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def dot(self, o: Point) -> float:
        return self.x * o.x + self.y * o.y

    def cross(self, o: Point) -> float:
        return self.x * o.y - self.y * o.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def dist(self, o: Point) -> float:
        return math.hypot(self.x - o.x, self.y - o.y)

    def unit(self) -> Point:
        n = self.norm()
        if n == 0.0:
            raise StructuralError("cannot normalize zero vector")
        return Point(self.x / n, self.y / n)

    def perp(self) -> Point:
        """Quarter turn counterclockwise."""
        return Point(-self.y, self.x)

    def angle(self) -> float:
        return math.atan2(self.y, self.x)


def from_angle(a: float) -> Point:
    return Point(math.cos(a), math.sin(a))


Bbox = tuple[float, float, float, float]


def bbox_union(boxes: Iterable[Bbox]) -> Bbox:
    xs0, ys0, xs1, ys1 = zip(*boxes)
    return (min(xs0), min(ys0), max(xs1), max(ys1))


def bbox_diag(box: Bbox) -> float:
    return math.hypot(box[2] - box[0], box[3] - box[1])


@dataclass(frozen=True, slots=True)
class ArcEdge:
    """One boundary piece: a segment, or a circular arc.

    Segments have ``center is None``.  Arcs store the signed sweep in
    radians; ``start``/``end`` are kept explicitly so adjacent edges
    share endpoints bit-for-bit after assembly.  A single edge may be a
    full circle (|sweep| = 2*pi with coincident endpoints); the area and
    parity formulas below remain valid for it.
    """

    start: Point
    end: Point
    center: Point | None = None
    radius: float = 0.0
    sweep: float = 0.0

    @staticmethod
    def seg(a: Point, b: Point) -> ArcEdge:
        return ArcEdge(a, b)

    @staticmethod
    def arc_from_sweep(center: Point, radius: float, start_angle: float,
                       sweep: float) -> ArcEdge:
        a = center + radius * from_angle(start_angle)
        b = center + radius * from_angle(start_angle + sweep)
        return ArcEdge(a, b, center, radius, sweep)

    @staticmethod
    def arc_between(center: Point, a: Point, b: Point, ccw: bool) -> ArcEdge:
        """Arc from a to b around center, going the requested way.

        Coincident endpoints give a zero sweep, never a full circle;
        build full circles from two halves instead.
        """
        radius = center.dist(a)
        a0 = (a - center).angle()
        delta = wrap_angle((b - center).angle() - a0)
        sweep = delta if ccw else delta - TWO_PI
        if abs(sweep) >= TWO_PI:
            sweep = 0.0
        return ArcEdge(a, b, center, radius, sweep)

    @property
    def is_arc(self) -> bool:
        return self.center is not None

    def start_angle(self) -> float:
        assert self.center is not None
        return (self.start - self.center).angle()

    def length(self) -> float:
        if self.center is None:
            return self.start.dist(self.end)
        return self.radius * abs(self.sweep)

    def area_term(self) -> float:
        """Signed contribution to the Green's-theorem area of a loop."""
        t = 0.5 * self.start.cross(self.end)
        if self.center is not None:
            th = abs(self.sweep)
            seg = 0.5 * self.radius * self.radius * (th - math.sin(th))
            t += math.copysign(seg, self.sweep) if self.sweep != 0.0 else 0.0
        return t

    def point_at(self, u: float) -> Point:
        if self.center is None:
            return Point(self.start.x + u * (self.end.x - self.start.x),
                         self.start.y + u * (self.end.y - self.start.y))
        a = self.start_angle() + u * self.sweep
        return self.center + self.radius * from_angle(a)

    def tangent_at(self, u: float) -> Point:
        if self.center is None:
            return (self.end - self.start).unit()
        a = self.start_angle() + u * self.sweep
        t = from_angle(a).perp()
        return t if self.sweep >= 0.0 else -t

    def midpoint(self) -> Point:
        return self.point_at(0.5)

    def reversed(self) -> ArcEdge:
        if self.center is None:
            return ArcEdge(self.end, self.start)
        return ArcEdge(self.end, self.start, self.center, self.radius, -self.sweep)

    def angle_in_sweep(self, theta: float, slack: float = 0.0) -> bool:
        """Is the direction ``theta`` covered by this arc's sweep?"""
        assert self.center is not None
        if abs(self.sweep) >= TWO_PI:
            return True
        if self.sweep >= 0.0:
            u = wrap_angle(theta - self.start_angle())
            return u <= self.sweep + slack or u >= TWO_PI - slack
        u = wrap_angle(self.start_angle() - theta)
        return u <= -self.sweep + slack or u >= TWO_PI - slack

    def bbox(self) -> Bbox:
        xs = [self.start.x, self.end.x]
        ys = [self.start.y, self.end.y]
        if self.center is not None:
            # Include quadrant extremes the sweep passes through.
            for k in range(4):
                a = k * 0.5 * math.pi
                if self.angle_in_sweep(a):
                    xs.append(self.center.x + self.radius * math.cos(a))
                    ys.append(self.center.y + self.radius * math.sin(a))
        return (min(xs), min(ys), max(xs), max(ys))

    def distance_to(self, p: Point) -> float:
        if self.center is None:
            return _point_seg_dist(p, self.start, self.end)
        v = p - self.center
        d = v.norm()
        if d > 0.0 and self.angle_in_sweep(v.angle()):
            return abs(d - self.radius)
        if d == 0.0:
            return self.radius
        return min(p.dist(self.start), p.dist(self.end))


def _point_seg_dist(p: Point, a: Point, b: Point) -> float:
    ab = b - a
    denom = ab.dot(ab)
    if denom == 0.0:
        return p.dist(a)
    t = (p - a).dot(ab) / denom
    t = 0.0 if t < 0.0 else (1.0 if t > 1.0 else t)
    return p.dist(a + t * ab)


@dataclass(frozen=True, slots=True)
class ArcLoop:
    """Closed chain of edges.  Positive area means counterclockwise."""

    edges: tuple[ArcEdge, ...]

    def validate(self, tol: float) -> None:
        if not self.edges:
            raise StructuralError("empty loop")
        for e, f in zip(self.edges, self.edges[1:] + self.edges[:1]):
            if e.end.dist(f.start) > tol:
                raise StructuralError(
                    f"loop not closed: gap {e.end.dist(f.start):.3e} at {e.end}")

    def area(self) -> float:
        return sum(e.area_term() for e in self.edges)

    def perimeter(self) -> float:
        return sum(e.length() for e in self.edges)

    def bbox(self) -> Bbox:
        return bbox_union(e.bbox() for e in self.edges)

    def reversed(self) -> ArcLoop:
        return ArcLoop(tuple(e.reversed() for e in reversed(self.edges)))

    def distance_to(self, p: Point) -> float:
        return min(e.distance_to(p) for e in self.edges)


@dataclass(frozen=True, slots=True)
class ArcRegion:
    """Finite union description: outer loops plus optional holes.

    Outer loops are counterclockwise, holes clockwise, so the total area
    is the plain sum of signed loop areas.  Current constructions never
    produce holes (inner parallel components of a Jordan domain are
    simply connected), but the field keeps the data model honest.
    """

    outer: tuple[ArcLoop, ...]
    holes: tuple[ArcLoop, ...] = ()

    def validate(self, tol: float) -> None:
        for lp in self.outer:
            lp.validate(tol)
            if lp.area() <= 0.0:
                raise StructuralError("outer loop not counterclockwise")
        for lp in self.holes:
            lp.validate(tol)
            if lp.area() >= 0.0:
                raise StructuralError("hole loop not clockwise")

    def area(self) -> float:
        return (sum(lp.area() for lp in self.outer)
                + sum(lp.area() for lp in self.holes))

    def perimeter(self) -> float:
        return (sum(lp.perimeter() for lp in self.outer)
                + sum(lp.perimeter() for lp in self.holes))

    def bbox(self) -> Bbox:
        return bbox_union(lp.bbox() for lp in self.outer)

    def all_loops(self) -> tuple[ArcLoop, ...]:
        return self.outer + self.holes

    def distance_to_boundary(self, p: Point) -> float:
        return min(lp.distance_to(p) for lp in self.all_loops())

    def contains_point(self, p: Point, tol: float | None = None) -> bool:
        """Point-in-region test; within ``tol`` of the boundary counts
        as inside."""
        if tol is None:
            tol = REL_TOL * max(1.0, bbox_diag(self.bbox()))
        if self.distance_to_boundary(p) <= tol:
            return True
        return _parity(self.all_loops(), p, tol) == 1


def _ray_edge_crossings(e: ArcEdge, p: Point, d: Point, delta: float) -> int | None:
    """Crossings of the open ray p + t d (t > 0) with one edge.

    Returns None when the hit is too close to call: near an endpoint,
    near tangency, or collinear.  Caller retries with a fresh direction.
    """
    if e.center is None:
        a, b = e.start, e.end
        ab = b - a
        det = d.cross(ab)
        ap = a - p
        if abs(det) <= 1e-14 * max(1.0, ab.norm()):
            # Parallel; collinear overlap is degenerate.
            if abs(d.cross(ap)) <= delta:
                return None
            return 0
        # Solve p + t d = a + s ab by crossing with ab and with d.
        t = ap.cross(ab) / det
        s = ap.cross(d) / det
        slen = max(ab.norm(), 1e-300)
        eps_s = delta / slen
        if s <= -eps_s or s >= 1.0 + eps_s:
            return 0  # line hit, but off the segment: no crossing at all
        if abs(s) * slen <= delta or abs(s - 1.0) * slen <= delta:
            return 0 if t < -delta else None  # endpoint graze ahead
        if -delta < t < delta:
            return None  # ray origin sits on the edge
        return 1 if t > 0.0 else 0

    c, r = e.center, e.radius
    pc = p - c
    bq = d.dot(pc)
    cq = pc.dot(pc) - r * r
    disc = bq * bq - cq
    if disc <= (delta * max(1.0, r)):
        # Tangent or miss; tangencies are degenerate, misses are clean.
        return None if disc > -(delta * max(1.0, r)) else 0
    sq = math.sqrt(disc)
    n = 0
    for t in (-bq - sq, -bq + sq):
        if -delta < t < delta:
            return None
        if t < 0.0:
            continue
        hit = p + t * d
        theta = (hit - c).angle()
        if e.angle_in_sweep(theta, slack=0.0) != e.angle_in_sweep(theta, slack=delta / max(r, delta)):
            return None  # grazes an arc endpoint
        if e.angle_in_sweep(theta):
            n += 1
    return n


def _parity(loops: Sequence[ArcLoop], p: Point, tol: float) -> int:
    delta = max(tol, 1e-12)
    for ang in _RAY_ANGLES:
        d = from_angle(ang)
        total = 0
        ok = True
        for lp in loops:
            for e in lp.edges:
                c = _ray_edge_crossings(e, p, d, delta)
                if c is None:
                    ok = False
                    break
                total += c
            if not ok:
                break
        if ok:
            return total & 1
    raise StructuralError(f"parity test degenerate in all directions at {p}")


# ---------------------------------------------------------------------------
# Disk sums (Minkowski sum with a closed disk of radius r)


def _disk_loop(center: Point, r: float) -> ArcLoop:
    # Two half circles so no edge needs a 2*pi sweep downstream (SVG).
    top = ArcEdge.arc_from_sweep(center, r, 0.0, math.pi)
    bot = ArcEdge.arc_from_sweep(center, r, math.pi, math.pi)
    return ArcLoop((top, bot))


def disk(center: Point, r: float) -> ArcRegion:
    if r <= 0.0:
        raise ValueError("disk radius must be positive")
    return ArcRegion((_disk_loop(center, r),))


def _dilate_polyline(pts: Sequence[Point], r: float, tol: float) -> ArcLoop:
    """Disk sum of an open polyline: walk one side, cap, walk back, cap.

    Concave junctions (right turns while walking) are mitred at the
    intersection of the neighbouring offset lines; if that intersection
    escapes either segment the polyline bends faster than r allows.
    """
    pts = [p for i, p in enumerate(pts) if i == 0 or p.dist(pts[i - 1]) > tol]
    if len(pts) == 1:
        return _disk_loop(pts[0], r)

    def one_side(seq: Sequence[Point]) -> list[ArcEdge]:
        edges: list[ArcEdge] = []
        offs: list[tuple[Point, Point]] = []
        for a, b in zip(seq, seq[1:]):
            n = (b - a).unit().perp() * -1.0  # right-hand side of travel
            offs.append((a + r * n, b + r * n))
        prev = offs[0]
        out: list[tuple[Point, Point]] = []
        arcs: dict[int, ArcEdge] = {}
        for i in range(1, len(offs)):
            cur = offs[i]
            v = seq[i]
            d_in = (prev[1] - prev[0]).unit()
            d_out = (cur[1] - cur[0]).unit()
            turn = d_in.cross(d_out)
            if abs(turn) <= tol:
                out.append(prev)
                prev = cur
            elif turn > 0.0:
                # Outside of a left turn: the offsets gap, join with an arc.
                out.append(prev)
                arcs[len(out)] = ArcEdge.arc_between(v, prev[1], cur[0], ccw=True)
                prev = cur
            else:
                # Inside of a right turn: trim both offsets at their
                # intersection.
                x = _line_intersection(prev, cur)
                if x is None:
                    raise ReachViolationError("offset lines parallel at a bend")
                for seg_, endx in ((prev, True), (cur, False)):
                    ab = seg_[1] - seg_[0]
                    t = (x - seg_[0]).dot(ab) / ab.dot(ab)
                    if t < -tol or t > 1.0 + tol:
                        raise ReachViolationError(
                            "polyline bends tighter than dilation radius")
                out.append((prev[0], x))
                prev = (x, cur[1])
        out.append(prev)
        edges = []
        for i, (a, b) in enumerate(out):
            if i in arcs:
                edges.append(arcs[i])
            if a.dist(b) > tol:
                edges.append(ArcEdge.seg(a, b))
        return edges

    fwd = one_side(pts)
    bwd = one_side(list(reversed(pts)))
    cap_end = ArcEdge.arc_between(pts[-1], fwd[-1].end, bwd[0].start, ccw=True)
    cap_start = ArcEdge.arc_between(pts[0], bwd[-1].end, fwd[0].start, ccw=True)
    return ArcLoop(tuple(fwd) + (cap_end,) + tuple(bwd) + (cap_start,))


def _line_intersection(s1: tuple[Point, Point], s2: tuple[Point, Point]) -> Point | None:
    d1 = s1[1] - s1[0]
    d2 = s2[1] - s2[0]
    det = d1.cross(d2)
    if det == 0.0:
        return None
    t = (s2[0] - s1[0]).cross(d2) / det
    return s1[0] + t * d1


def _dilate_loop(loop: ArcLoop, r: float, tol: float) -> ArcLoop:
    """Outward offset of a counterclockwise loop by r.

    Valid when the loop's concave features have radius >= r (positive
    reach); anything tighter raises.  Concave arcs of radius exactly r
    collapse to their centers, which is fine as long as the neighbours
    meet there.
    """
    pieces: list[ArcEdge | Point] = []
    for e in loop.edges:
        if e.center is None:
            n = (e.end - e.start).unit().perp() * -1.0
            pieces.append(ArcEdge.seg(e.start + r * n, e.end + r * n))
        elif e.sweep > 0.0:
            pieces.append(ArcEdge.arc_from_sweep(
                e.center, e.radius + r, e.start_angle(), e.sweep))
        else:
            rr = e.radius - r
            if rr > tol:
                pieces.append(ArcEdge.arc_from_sweep(
                    e.center, rr, e.start_angle(), e.sweep))
            elif rr >= -tol:
                pieces.append(e.center)  # collapsed to a point
            else:
                raise ReachViolationError(
                    f"concave arc radius {e.radius:.6g} below dilation radius {r:.6g}")

    # Resolve collapsed arcs to their centers, then join gaps with arcs
    # around the original vertices.
    resolved: list[ArcEdge] = []
    n = len(pieces)
    starts = [p.start if isinstance(p, ArcEdge) else p for p in pieces]
    ends = [p.end if isinstance(p, ArcEdge) else p for p in pieces]
    for i, p in enumerate(pieces):
        if isinstance(p, ArcEdge):
            resolved.append(p)
        # Join to the next piece.
        j = (i + 1) % n
        a, b = ends[i], starts[j]
        if a.dist(b) <= tol:
            continue
        v = loop.edges[i].end  # shared original vertex
        if abs(v.dist(a) - r) > 10 * tol or abs(v.dist(b) - r) > 10 * tol:
            raise ReachViolationError("offset pieces do not meet on the vertex circle")
        join = ArcEdge.arc_between(v, a, b, ccw=True)
        if join.sweep > math.pi + 1e-9:
            raise ReachViolationError("reflex vertex gap in outward offset")
        resolved.append(join)
    return ArcLoop(tuple(resolved))


def dilate_by_disk(shape: ArcRegion | Sequence[Point] | Point, r: float,
                   tol: float | None = None, verify: bool = True) -> ArcRegion:
    """Minkowski sum of ``shape`` with a closed disk of radius r.

    ``shape`` may be a point, an open polyline (sequence of points), or
    an ArcRegion without holes.  Raises ReachViolationError when the
    result would not be embedded (concave radius below r, offsets
    crossing).
    """
    if r <= 0.0:
        raise ValueError("dilation radius must be positive")
    if isinstance(shape, Point):
        return disk(shape, r)
    if isinstance(shape, ArcRegion):
        if shape.holes:
            raise StructuralError("hole dilation not supported")
        if tol is None:
            tol = REL_TOL * max(1.0, bbox_diag(shape.bbox()))
        loops = tuple(_dilate_loop(lp, r, tol) for lp in shape.outer)
        region = ArcRegion(loops)
    else:
        pts = [p if isinstance(p, Point) else Point(*p) for p in shape]
        if not pts:
            raise ValueError("empty polyline")
        if tol is None:
            box = bbox_union([(p.x, p.y, p.x, p.y) for p in pts])
            tol = REL_TOL * max(1.0, bbox_diag(box) + 2 * r)
        region = ArcRegion((_dilate_polyline(pts, r, tol),))
    region.validate(10 * tol)
    if verify:
        for lp in region.outer:
            if loop_self_intersects(lp, tol):
                raise ReachViolationError("dilated boundary self-intersects")
    return region


# ---------------------------------------------------------------------------
# Pairwise intersection tests, used to verify assembled boundaries.


def _seg_seg_dist(a1: Point, b1: Point, a2: Point, b2: Point) -> float:
    d1, d2 = b1 - a1, b2 - a2
    det = d1.cross(d2)
    if det != 0.0:
        t = (a2 - a1).cross(d2) / det
        s = (a2 - a1).cross(d1) / det
        if 0.0 <= t <= 1.0 and 0.0 <= s <= 1.0:
            return 0.0
    return min(_point_seg_dist(a1, a2, b2), _point_seg_dist(b1, a2, b2),
               _point_seg_dist(a2, a1, b1), _point_seg_dist(b2, a1, b1))


def _seg_arc_dist(a: Point, b: Point, arc: ArcEdge) -> float:
    assert arc.center is not None
    c, r = arc.center, arc.radius
    ab = b - a
    den = ab.dot(ab)
    cands = [arc.distance_to(a), arc.distance_to(b),
             _point_seg_dist(arc.start, a, b), _point_seg_dist(arc.end, a, b)]
    if den > 0.0:
        # Crossing roots of |a + t ab - c|^2 = r^2.
        ac = a - c
        bq = ac.dot(ab) / den
        cq = (ac.dot(ac) - r * r) / den
        disc = bq * bq - cq
        if disc >= 0.0:
            sq = math.sqrt(disc)
            for t in (-bq - sq, -bq + sq):
                if 0.0 <= t <= 1.0:
                    hit = a + t * ab
                    if arc.angle_in_sweep((hit - c).angle()):
                        return 0.0
        # Interior stationary point: segment point nearest the center.
        t = (c - a).dot(ab) / den
        if 0.0 <= t <= 1.0:
            q = a + t * ab
            v = q - c
            if v.norm() > 0.0 and arc.angle_in_sweep(v.angle()):
                cands.append(abs(v.norm() - r))
    return min(cands)


def _arc_arc_dist(e1: ArcEdge, e2: ArcEdge) -> float:
    assert e1.center is not None and e2.center is not None
    c1, r1, c2, r2 = e1.center, e1.radius, e2.center, e2.radius
    d = c1.dist(c2)
    cands = [e2.distance_to(e1.start), e2.distance_to(e1.end),
             e1.distance_to(e2.start), e1.distance_to(e2.end)]
    if d > 0.0:
        u = (c2 - c1) * (1.0 / d)
        # Circle-circle intersection points.
        if abs(r1 - r2) <= d <= r1 + r2:
            x = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
            h2 = r1 * r1 - x * x
            h = math.sqrt(max(h2, 0.0))
            base = c1 + x * u
            for sgn in (1.0, -1.0):
                p = base + (sgn * h) * u.perp()
                if (e1.angle_in_sweep((p - c1).angle())
                        and e2.angle_in_sweep((p - c2).angle())):
                    return 0.0
        # Closest-approach points along the center line.
        for s1 in (1.0, -1.0):
            for s2 in (1.0, -1.0):
                p1 = c1 + (s1 * r1) * u
                p2 = c2 + (s2 * r2) * u
                if (e1.angle_in_sweep((p1 - c1).angle())
                        and e2.angle_in_sweep((p2 - c2).angle())):
                    cands.append(p1.dist(p2))
    elif abs(r1 - r2) == 0.0:
        # Concentric equal circles: overlap unless sweeps are disjoint.
        mid = e1.point_at(0.5)
        if e2.angle_in_sweep((mid - c2).angle()):
            return 0.0
    return min(cands)


def edge_clearance(e1: ArcEdge, e2: ArcEdge) -> float:
    """Minimum distance between two edges (0 if they cross)."""
    if e1.center is None and e2.center is None:
        return _seg_seg_dist(e1.start, e1.end, e2.start, e2.end)
    if e1.center is None:
        return _seg_arc_dist(e1.start, e1.end, e2)
    if e2.center is None:
        return _seg_arc_dist(e2.start, e2.end, e1)
    return _arc_arc_dist(e1, e2)


def loop_self_intersects(loop: ArcLoop, tol: float) -> bool:
    """Do any two non-adjacent edges come within tol of each other?

    Adjacent edges legitimately meet at their shared endpoint; they are
    checked only for overlap away from it, via midpoint separation.
    """
    edges = loop.edges
    n = len(edges)
    if n < 3:
        return False
    for i in range(n):
        for j in range(i + 1, n):
            adjacent = (j == i + 1) or (i == 0 and j == n - 1)
            d = edge_clearance(edges[i], edges[j])
            if adjacent:
                continue
            if d <= tol:
                return True
    return False
