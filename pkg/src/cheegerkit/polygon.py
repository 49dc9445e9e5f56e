"""Simple polygons: validation, orientation, basic queries.

A ``JordanPolygon`` is the closed region bounded by a simple polygonal
curve.  Construction canonicalizes the input: duplicate and collinear
vertices are dropped, orientation is forced counterclockwise, and
simplicity is checked pairwise (vectorized, so the 720-gon fixture stays
cheap).  Everything downstream assumes these invariants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, InputError
from .geometry import REL_TOL, Bbox, Point, _point_seg_dist


def _dedupe(points: list[Point], tol: float) -> list[Point]:
    out: list[Point] = []
    for p in points:
        if not out or p.dist(out[-1]) > tol:
            out.append(p)
    while len(out) > 1 and out[0].dist(out[-1]) <= tol:
        out.pop()
    return out


def _drop_collinear(points: list[Point], tol: float) -> list[Point]:
    # Area of the triangle at each vertex against a length scale.
    out = list(points)
    changed = True
    while changed and len(out) > 2:
        changed = False
        for i in range(len(out)):
            a, b, c = out[i - 1], out[i], out[(i + 1) % len(out)]
            ab, bc = b - a, c - b
            if abs(ab.cross(bc)) <= tol * max(ab.norm(), bc.norm()):
                del out[i]
                changed = True
                break
    return out


def _check_simple(points: list[Point], tol: float) -> None:
    """Reject crossings and near-touches between non-adjacent edges.

    A vectorized bounding-box sieve keeps the quadratic pass cheap even
    for the 720-gon; candidate pairs get an exact distance test.
    """
    n = len(points)
    px = np.array([p.x for p in points])
    py = np.array([p.y for p in points])
    bx, by = np.roll(px, -1), np.roll(py, -1)
    lox, hix = np.minimum(px, bx) - tol, np.maximum(px, bx) + tol
    loy, hiy = np.minimum(py, by) - tol, np.maximum(py, by) + tol
    idx = np.arange(n)
    for i in range(n):
        cand = ((idx > i + 1) & (lox[i] <= hix) & (lox <= hix[i])
                & (loy[i] <= hiy) & (loy <= hiy[i]))
        if i == 0:
            cand[n - 1] = False  # wrap-around neighbour
        for j in idx[cand]:
            d = _seg_seg_min_dist(points[i], points[(i + 1) % n],
                                  points[int(j)], points[(int(j) + 1) % n])
            if d <= tol:
                raise InputError(f"polygon edges {i} and {int(j)} intersect")


def _seg_seg_min_dist(a1: Point, b1: Point, a2: Point, b2: Point) -> float:
    d1, d2 = b1 - a1, b2 - a2
    det = d1.cross(d2)
    if det != 0.0:
        t = (a2 - a1).cross(d2) / det
        s = (a2 - a1).cross(d1) / det
        if 0.0 <= t <= 1.0 and 0.0 <= s <= 1.0:
            return 0.0
    return min(_point_seg_dist(a1, a2, b2), _point_seg_dist(b1, a2, b2),
               _point_seg_dist(a2, a1, b1), _point_seg_dist(b2, a1, b1))


@dataclass(frozen=True)
class JordanPolygon:
    """Canonical simple polygon, counterclockwise, no repeated or
    collinear vertices."""

    vertices: tuple[Point, ...]

    @staticmethod
    def from_coords(coords: Iterable[Sequence[float]] | Iterable[Point]) -> JordanPolygon:
        pts = []
        for c in coords:
            p = c if isinstance(c, Point) else Point(float(c[0]), float(c[1]))
            if not (math.isfinite(p.x) and math.isfinite(p.y)):
                raise InputError("non-finite vertex coordinate")
            pts.append(p)
        if len(pts) < 3:
            raise InputError("polygon needs at least 3 vertices")
        xs = [p.x for p in pts]
        ys = [p.y for p in pts]
        diag = math.hypot(max(xs) - min(xs), max(ys) - min(ys))
        if diag == 0.0:
            raise InputError("all vertices coincide")
        tol = REL_TOL * diag
        pts = _dedupe(pts, tol)
        pts = _drop_collinear(pts, tol)
        if len(pts) < 3:
            raise InputError("polygon degenerates after canonicalization")
        area2 = sum(a.cross(b) for a, b in zip(pts, pts[1:] + pts[:1]))
        if abs(area2) <= tol * diag:
            raise InputError("polygon has zero area")
        if area2 < 0.0:
            pts.reverse()
        _check_simple(pts, tol)
        return JordanPolygon(tuple(pts))

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def area(self) -> float:
        v = self.vertices
        return 0.5 * sum(a.cross(b) for a, b in zip(v, v[1:] + v[:1]))

    def perimeter(self) -> float:
        v = self.vertices
        return sum(a.dist(b) for a, b in zip(v, v[1:] + v[:1]))

    def bbox(self) -> Bbox:
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return (min(xs), min(ys), max(xs), max(ys))

    def scale(self) -> float:
        b = self.bbox()
        return math.hypot(b[2] - b[0], b[3] - b[1])

    def tol(self) -> float:
        return REL_TOL * self.scale()

    def is_reflex(self) -> list[bool]:
        """Per-vertex flag; interior angle above pi."""
        v = self.vertices
        n = len(v)
        out = []
        for i in range(n):
            a, b, c = v[i - 1], v[i], v[(i + 1) % n]
            out.append((b - a).cross(c - b) < 0.0)
        return out

    def is_convex(self) -> bool:
        return not any(self.is_reflex())

    def boundary_distance(self, p: Point) -> float:
        return min(_point_seg_dist(p, a, b) for a, b in self.edges())

    def contains_point(self, p: Point, tol: float | None = None) -> bool:
        if tol is None:
            tol = self.tol()
        if self.boundary_distance(p) <= tol:
            return True
        # Crossing parity against a horizontal ray; the boundary band
        # above already absorbed every near-degenerate case that could
        # flip the count, but nudge the ray if a vertex sits on it.
        y = p.y
        v = self.vertices
        if any(abs(q.y - y) <= tol for q in v):
            y += 3.0 * tol
        inside = False
        for a, b in self.edges():
            if (a.y > y) != (b.y > y):
                xcross = a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y)
                if xcross > p.x:
                    inside = not inside
        return inside

    def clearance(self, p: Point) -> float:
        """Distance to the boundary for an interior point."""
        if not self.contains_point(p):
            raise DomainError(f"point {p} is outside the domain")
        return self.boundary_distance(p)
