"""SVG rendering of domains, minimizer sets, and skeleton curves.

Circular boundary arcs map onto native elliptical-arc path commands
and parabolic skeleton pieces onto quadratic Beziers, both exact; no
curve is flattened to a polyline.  Coordinates keep the mathematical
orientation through a y-flip on the outer group.
"""

from __future__ import annotations

import math

from .geometry import ArcEdge, ArcLoop, ArcRegion
from .medial import ParabolaCurve, SegmentCurve
from .parallel import SkeletonCurve
from .polygon import JordanPolygon


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _xy(p) -> str:
    return f"{_fmt(p.x)} {_fmt(p.y)}"


def _arc_cmds(e: ArcEdge) -> list[str]:
    # A cannot span more than a half turn in one command (and a full
    # circle collapses to a no-op), so wider sweeps emit two halves.
    if abs(e.sweep) > math.pi:
        mid = e.point_at(0.5)
        half = 0.5 * e.sweep
        return (_arc_cmds(ArcEdge(e.start, mid, e.center, e.radius, half))
                + _arc_cmds(ArcEdge(mid, e.end, e.center, e.radius, half)))
    flag = 1 if e.sweep > 0.0 else 0
    return [f"A {_fmt(e.radius)} {_fmt(e.radius)} 0 0 {flag} {_xy(e.end)}"]


def _loop_path(loop: ArcLoop) -> str:
    parts = [f"M {_xy(loop.edges[0].start)}"]
    for e in loop.edges:
        if e.is_arc:
            parts.extend(_arc_cmds(e))
        else:
            parts.append(f"L {_xy(e.end)}")
    parts.append("Z")
    return " ".join(parts)


def _region_path(region: ArcRegion) -> str:
    return " ".join(_loop_path(lp) for lp in region.all_loops())


def _polygon_path(poly: JordanPolygon) -> str:
    head, *rest = poly.vertices
    segs = " ".join(f"L {_xy(p)}" for p in rest)
    return f"M {_xy(head)} {segs} Z"


def _skeleton_path(curves: tuple[SkeletonCurve, ...]) -> str:
    parts = []
    for sk in curves:
        first = True
        for curve, _, _ in sk.pieces:
            if first:
                parts.append(f"M {_xy(curve.point(0.0))}")
                first = False
            if isinstance(curve, ParabolaCurve):
                p0, p1 = curve.point(0.0), curve.point(1.0)
                d0, d1 = curve.tangent(0.0), curve.tangent(1.0)
                det = d0.cross(d1)
                if abs(det) > 1e-12:
                    s = (p1 - p0).cross(d1) / det
                    ctrl = p0 + d0 * s
                    parts.append(f"Q {_xy(ctrl)} {_xy(p1)}")
                    continue
            parts.append(f"L {_xy(curve.point(1.0))}")
    return " ".join(parts)


def render_svg(polygon: JordanPolygon,
               minimal: ArcRegion | None = None,
               maximal: ArcRegion | None = None,
               skeleton: tuple[SkeletonCurve, ...] = ()) -> str:
    """Whole figure as an SVG document string.

    Layering: domain outline at the back, minimal set filled, maximal
    set outlined, skeleton curves dashed on top.
    """
    xmin, ymin, xmax, ymax = polygon.bbox()
    margin = 0.05 * polygon.scale()
    x0, y0 = xmin - margin, ymin - margin
    w, h = xmax - xmin + 2 * margin, ymax - ymin + 2 * margin
    lw = 0.004 * polygon.scale()

    layers = [f'<path d="{_polygon_path(polygon)}" fill="#f4f1ea" '
              f'stroke="#333" stroke-width="{_fmt(lw)}"/>']
    if minimal is not None:
        layers.append(f'<path d="{_region_path(minimal)}" fill="#7aa6d6" '
                      'fill-opacity="0.55" fill-rule="evenodd" '
                      'stroke="none"/>')
    if maximal is not None:
        layers.append(f'<path d="{_region_path(maximal)}" fill="none" '
                      f'stroke="#1f4e8c" stroke-width="{_fmt(1.5 * lw)}"/>')
    if skeleton:
        dash = f"{_fmt(3 * lw)} {_fmt(3 * lw)}"
        layers.append(f'<path d="{_skeleton_path(skeleton)}" fill="none" '
                      f'stroke="#c0392b" stroke-width="{_fmt(lw)}" '
                      f'stroke-dasharray="{dash}"/>')

    body = "\n    ".join(layers)
    flip = ymin + ymax  # mirror about the bbox midline, keeps the view box
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">\n'
        f'  <g transform="matrix(1 0 0 -1 0 {_fmt(flip)})">\n'
        f'    {body}\n'
        '  </g>\n'
        '</svg>\n')
