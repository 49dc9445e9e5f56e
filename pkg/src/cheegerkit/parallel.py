"""Inner parallel bodies and the clearance filtration of the medial axis.

Eroding a polygon by r keeps the medial subtree of clearance >= r.  At
a fixed r that subtree splits into

* fat pieces, where clearance exceeds r on an open set: each connected
  fat piece spans a two-dimensional component of the inner body, and
  its boundary is recovered by walking an Euler tour of the piece and
  offsetting the site on the left of travel (segments for edge sites,
  radius-r arcs for reflex-vertex sites).  Anchors of consecutive tour
  pieces coincide identically, so no joining arcs are ever needed.
* level chains, where clearance equals r along whole edges: these are
  one-dimensional.  A chain attached to fat pieces at one end is a
  tendril, at both ends a bridge between two fat pieces, at neither a
  free degenerate curve (only possible at r = inradius).
* isolated vertices at clearance exactly r: degenerate points.

The same Euler tour drives the outer (dilated) boundary used by the
minimizer construction: there the anchors are the feet of the walk
nodes on the polygon's edges, vertex sites contribute nothing, and any
anchor mismatch at a node is closed by an arc of the node's maximal
disk.  Both emitters live here so they can share the walk machinery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError, StructuralError
from .geometry import REL_TOL_DEGEN, ArcEdge, ArcLoop, ArcRegion, Point, wrap_angle
from .medial import Curve, MedialGraph, SegmentCurve, Site


@dataclass(frozen=True, slots=True)
class WalkNode:
    point: Point
    mv: int | None  # medial vertex index; None for cut points


@dataclass(frozen=True, slots=True)
class WalkEdge:
    a: int
    b: int
    curve: Curve
    site_left: Site  # left of the curve's a -> b direction
    site_right: Site


@dataclass
class Walk:
    """Tree walked by the boundary tours; nodes reference the medial graph."""

    nodes: list[WalkNode] = field(default_factory=list)
    edges: list[WalkEdge] = field(default_factory=list)
    node_of_mv: dict[int, int] = field(default_factory=dict)

    def add_node(self, point: Point, mv: int | None) -> int:
        if mv is not None and mv in self.node_of_mv:
            return self.node_of_mv[mv]
        self.nodes.append(WalkNode(point, mv))
        if mv is not None:
            self.node_of_mv[mv] = len(self.nodes) - 1
        return len(self.nodes) - 1

    def add_edge(self, a: int, b: int, curve: Curve,
                 site_left: Site, site_right: Site) -> None:
        self.edges.append(WalkEdge(a, b, curve, site_left, site_right))


@dataclass
class SkeletonCurve:
    """A level chain: clearance identically r along the whole curve.

    Parametrized by arclength fraction t in [0, 1]; when attached at
    one end only, t = 0 is the attached end.  Level pieces are always
    straight (a curved bisector cannot keep both site distances
    constant), so the parametrization has uniform speed.
    """

    pieces: tuple[tuple[SegmentCurve, Site, Site], ...]
    r: float
    family: str | None  # "gamma1" | "gamma2" | None
    attached_start: bool
    attached_end: bool
    mv_start: int
    mv_end: int

    @property
    def length(self) -> float:
        return sum(c.length() for c, _, _ in self.pieces)

    def _locate(self, t: float) -> tuple[int, float]:
        if not 0.0 <= t <= 1.0:
            raise DomainError(f"curve parameter {t} outside [0, 1]")
        target = t * self.length
        run = 0.0
        for i, (c, _, _) in enumerate(self.pieces):
            ln = c.length()
            if target <= run + ln or i == len(self.pieces) - 1:
                return i, min(1.0, max(0.0, (target - run) / ln))
            run += ln
        raise AssertionError

    def point_at(self, t: float) -> Point:
        i, u = self._locate(t)
        return self.pieces[i][0].point(u)

    def tangent_at(self, t: float) -> Point:
        i, _ = self._locate(t)
        return self.pieces[i][0].tangent(0.5)

    def offset_at(self, t: float, side: int) -> Point:
        """Boundary contact point at distance r: side +1 left, -1 right."""
        i, u = self._locate(t)
        curve, sl, sr = self.pieces[i]
        s = sl if side > 0 else sr
        return s.nearest_point(curve.point(u))

    def prefix(self, t: float) -> list[tuple[SegmentCurve, Site, Site]]:
        """Pieces from the start up to arclength fraction t."""
        if t <= 0.0:
            return []
        i, u = self._locate(t)
        out = [self.pieces[k] for k in range(i)]
        if u > 0.0:
            c, sl, sr = self.pieces[i]
            out.append((c.sub(0.0, u), sl, sr))
        return out


@dataclass
class ParallelStructure:
    """Everything the erosion at one radius contains."""

    r: float
    interior_components: list[ArcRegion]
    tendrils: list[SkeletonCurve]
    handles: list[SkeletonCurve]
    degenerate_point: Point | None
    degenerate_curve: SkeletonCurve | None
    graph: MedialGraph
    walks: list[Walk]  # parallel to interior_components
    degenerate_extra: list[object] = field(default_factory=list)

    @property
    def is_empty(self) -> bool:
        return (not self.interior_components and not self.tendrils
                and not self.handles and self.degenerate_point is None
                and self.degenerate_curve is None)


def inner_area(structure: ParallelStructure) -> float:
    return sum(c.area() for c in structure.interior_components)


# ---------------------------------------------------------------------------
# Filtration.


def _classify_edges(graph: MedialGraph, r: float, eps: float):
    """Split edges into fat (possibly cut), level, and discarded."""
    fat_full, stubs, level = [], [], []
    for ei, e in enumerate(graph.edges):
        c_lo, c_hi = min(e.c0, e.c1), max(e.c0, e.c1)
        if c_hi <= r + eps:
            if c_lo >= r - eps:
                level.append(ei)
            continue
        if c_lo >= r - eps:
            fat_full.append(ei)
        else:
            stubs.append(ei)
    return fat_full, stubs, level


def _qualifies(graph: MedialGraph, v: int, r: float, eps: float) -> bool:
    return graph.vertices[v].clearance >= r - eps


def has_no_neck(graph: MedialGraph, r: float) -> bool:
    """Is the inner body at radius r connected?

    Decided on the medial tree: the subgraph induced by vertices of
    clearance >= r (edges survive iff both endpoints do; clearance is
    monotone per edge so no interior dip can hide).
    """
    eps = REL_TOL_DEGEN * graph.polygon.scale()
    if r <= 0.0 or r > graph.inradius + eps:
        raise DomainError(
            f"radius {r} outside (0, inradius={graph.inradius}]")
    qual = [v for v in range(len(graph.vertices))
            if _qualifies(graph, v, r, eps)]
    if not qual:
        return True
    qual_set = set(qual)
    seen = {qual[0]}
    stack = [qual[0]]
    while stack:
        v = stack.pop()
        for ei in graph.adjacency[v]:
            e = graph.edges[ei]
            w = e.other(v)
            if w in qual_set and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(qual)


def no_neck_profile(graph: MedialGraph, samples: int = 16) -> list[tuple[float, bool]]:
    """Neck verdicts on a radius grid refined by every critical clearance.

    Between consecutive critical values the verdict is constant, so the
    returned rows determine the answer for every radius in (0, inradius].
    """
    if samples < 2:
        raise DomainError("profile needs at least 2 samples")
    inr = graph.inradius
    crit = graph.critical_clearances()
    rs = {inr * k / samples for k in range(1, samples + 1)}
    rs.update(crit)
    rs.update(0.5 * (a + b) for a, b in zip(crit, crit[1:]))
    return [(r, has_no_neck(graph, r)) for r in sorted(rs) if 0.0 < r <= inr]


def disconnection_bands(graph: MedialGraph) -> list[tuple[float, float]]:
    """Maximal radius intervals (lo, hi] on which the inner body is
    disconnected.  Exact: the verdict is constant between consecutive
    critical clearances and evaluated at each one."""
    crit = graph.critical_clearances()
    bands: list[list[float]] = []
    prev = 0.0
    for c in crit:
        if not has_no_neck(graph, c):
            if bands and bands[-1][1] == prev:
                bands[-1][1] = c
            else:
                bands.append([prev, c])
        prev = c
    return [(lo, hi) for lo, hi in bands]


def gamma2_empty_check(structure: ParallelStructure, graph: MedialGraph) -> bool:
    """Does the one-sided neck hypothesis hold at this structure's radius?

    True iff some R > r keeps the inner body connected for every radius
    up to R.  When it holds, bridges between components are impossible;
    this is asserted on the structure.
    """
    r = structure.r
    eps = REL_TOL_DEGEN * graph.polygon.scale()
    crit = graph.critical_clearances()
    above = [c for c in crit if c > r + eps]
    R = min(above) if above else graph.inradius
    if R <= r:
        R = graph.inradius
    # Verdicts are constant between consecutive critical clearances and
    # match the value at the right endpoint, so these points decide (0, R].
    for c in [c for c in crit if c <= R] + [R]:
        if not has_no_neck(graph, c):
            return False
    if structure.handles:
        raise StructuralError(
            "neck hypothesis holds below R yet a bridge chain exists")
    return True


# ---------------------------------------------------------------------------
# Euler tour and the two boundary emitters.


@dataclass(slots=True)
class _Piece:
    node_u: int
    node_v: int
    anchor_u: Point
    anchor_v: Point
    t_into_u: Point  # unit tangent at u pointing into the curve
    t_into_v: Point
    geom: ArcEdge | None


def _euler_tour(walk: Walk) -> list[tuple[int, int, Curve, Site, Site]]:
    """Directed pieces (u, v, curve u->v, left site, right site) of the
    closed walk around the tree, each edge visited once per direction."""
    out: list[list[tuple[float, int, int]]] = [[] for _ in walk.nodes]
    for ei, e in enumerate(walk.edges):
        ta = e.curve.tangent(0.0)
        tb = -e.curve.tangent(1.0)
        out[e.a].append((math.atan2(ta.y, ta.x), ei, 0))
        out[e.b].append((math.atan2(tb.y, tb.x), ei, 1))
    pos: dict[tuple[int, int], tuple[int, int]] = {}
    for ni, lst in enumerate(out):
        lst.sort()
        for idx, (_, ei, d) in enumerate(lst):
            pos[(ei, d)] = (ni, idx)

    def arrive_node(ei: int, d: int) -> int:
        e = walk.edges[ei]
        return e.b if d == 0 else e.a

    halves = [(ei, d) for ei in range(len(walk.edges)) for d in (0, 1)]
    start = halves[0]
    order: list[tuple[int, int]] = []
    cur = start
    while True:
        order.append(cur)
        v = arrive_node(*cur)
        rev = (cur[0], 1 - cur[1])
        ni, idx = pos[rev]
        assert ni == v
        lst = out[v]
        _, nei, nd = lst[(idx - 1) % len(lst)]
        cur = (nei, nd)
        if cur == start:
            break
    if len(order) != len(halves):
        raise StructuralError("boundary walk did not close over the tree")

    pieces = []
    for ei, d in order:
        e = walk.edges[ei]
        if d == 0:
            pieces.append((e.a, e.b, e.curve, e.site_left, e.site_right))
        else:
            pieces.append((e.b, e.a, e.curve.rev(), e.site_right, e.site_left))
    return pieces


def _erode_anchor(site: Site, m: Point, r: float) -> Point:
    f = site.nearest_point(m)
    return f + r * (m - f).unit()


def _finish_loop(edges: list[ArcEdge], scale: float) -> ArcLoop:
    if len(edges) < 2:
        raise StructuralError("degenerate boundary loop")
    loop = ArcLoop(tuple(edges))
    if loop.area() < 0.0:
        loop = loop.reversed()
    loop.validate(1e-6 * scale)
    return loop


def erode_region(walk: Walk, r: float, scale: float) -> ArcRegion:
    """Boundary of the inner body component spanned by a fat walk tree."""
    tol = 1e-6 * scale
    tour = _euler_tour(walk)
    edges: list[ArcEdge] = []
    cur: Point | None = None
    for (u, v, curve, sl, _) in tour:
        pu, pv = walk.nodes[u].point, walk.nodes[v].point
        a = _erode_anchor(sl, pu, r)
        b = _erode_anchor(sl, pv, r)
        if cur is not None and a.dist(cur) > tol:
            raise StructuralError("inner boundary tour tore at a junction")
        start = cur if cur is not None else a
        if sl.is_vertex:
            c = sl.a
            th_a = (start - c).angle()
            th_m = (_erode_anchor(sl, curve.point(0.5), r) - c).angle()
            th_b = (b - c).angle()
            sweep = wrap_angle(th_m - th_a) + wrap_angle(th_b - th_m)
            if abs(sweep) * r > 1e-12 * scale:
                edges.append(ArcEdge(start, b, c, r, sweep))
                cur = b
            else:
                cur = b if cur is None else cur
        else:
            if start.dist(b) > 1e-12 * scale:
                edges.append(ArcEdge.seg(start, b))
                cur = b
            else:
                cur = b if cur is None else cur
    if cur is not None and edges and cur.dist(edges[0].start) > tol:
        raise StructuralError("inner boundary tour failed to close")
    # snap closure
    if edges and edges[-1].end.dist(edges[0].start) > 0.0:
        last = edges[-1]
        edges[-1] = ArcEdge(last.start, edges[0].start, last.center,
                            last.radius, last.sweep)
    return ArcRegion((_finish_loop(edges, scale),))


def dilate_region(walk: Walk, scale: float) -> ArcRegion:
    """Boundary of the union of maximal disks centered on a walk tree.

    Edge sites contribute the bands of wall their disks touch; vertex
    sites touch the wall only at the reflex vertex itself.  Where the
    touch point jumps at a node, the boundary follows that node's
    maximal circle.
    """
    tol = 1e-7 * scale
    tour = _euler_tour(walk)
    pieces: list[_Piece] = []
    for (u, v, curve, sl, _) in tour:
        pu, pv = walk.nodes[u].point, walk.nodes[v].point
        if sl.is_vertex:
            a = b = sl.a
            geom = None
        else:
            a = sl.nearest_point(pu)
            b = sl.nearest_point(pv)
            geom = ArcEdge.seg(a, b) if a.dist(b) > 1e-12 * scale else None
        pieces.append(_Piece(u, v, a, b, curve.tangent(0.0),
                             -curve.tangent(1.0), geom))

    edges: list[ArcEdge] = []
    n = len(pieces)
    cur: Point | None = None
    first_anchor = pieces[0].anchor_u
    for i, pc in enumerate(pieces):
        prev = pieces[(i - 1) % n]
        if prev.node_v != pc.node_u:
            raise StructuralError("tour pieces out of order")
        a_prev = prev.anchor_v if i > 0 else first_anchor
        if i == 0:
            cur = first_anchor
        elif a_prev.dist(pc.anchor_u) > tol:
            node = walk.nodes[pc.node_u].point
            edges.append(_gap_arc(node, cur, pc.anchor_u,
                                  (prev.t_into_v, pc.t_into_u), scale))
            cur = pc.anchor_u
        if pc.geom is not None:
            edges.append(ArcEdge.seg(cur, pc.anchor_v))
            cur = pc.anchor_v
    # closing junction: last piece back to the first anchor
    if cur is not None and cur.dist(first_anchor) > tol:
        node = walk.nodes[pieces[0].node_u].point
        edges.append(_gap_arc(node, cur, first_anchor,
                              (pieces[-1].t_into_v, pieces[0].t_into_u), scale))
    return ArcRegion((_finish_loop(edges, scale),))


def _gap_arc(center: Point, a: Point, b: Point,
             tangents: tuple[Point, Point], scale: float) -> ArcEdge:
    ra, rb = a.dist(center), b.dist(center)
    if abs(ra - rb) > 1e-6 * scale:
        raise StructuralError("junction arc endpoints at unequal radii")
    r = 0.5 * (ra + rb)
    th_a = (a - center).angle()
    th_b = (b - center).angle()
    base = wrap_angle(th_b - th_a)
    options = [base, base - math.copysign(2.0 * math.pi, base)]
    pull = tangents[0] + tangents[1]
    best = None
    for sweep in options:
        mid = center + r * Point(math.cos(th_a + 0.5 * sweep),
                                 math.sin(th_a + 0.5 * sweep))
        score = (mid - center).unit().dot(pull)
        if score < 0.0 and (best is None or abs(sweep) < abs(best)):
            best = sweep
    if best is None:
        raise StructuralError("junction arc direction is ambiguous")
    return ArcEdge(a, b, center, r, best)


# ---------------------------------------------------------------------------
# Structure assembly.


def erode(graph: MedialGraph, r: float) -> ParallelStructure:
    poly = graph.polygon
    scale = poly.scale()
    eps = REL_TOL_DEGEN * scale
    if r <= 0.0:
        raise DomainError(f"erosion radius must be positive, got {r}")
    if r > graph.inradius + eps:
        return ParallelStructure(r, [], [], [], None, None, graph, [])

    fat_full, stub_ids, level_ids = _classify_edges(graph, r, eps)

    # Union-find fat components over full fat edges.
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        parent[find(x)] = find(y)

    fat_vertices: set[int] = set()
    for ei in fat_full:
        e = graph.edges[ei]
        fat_vertices.update((e.v0, e.v1))
        union(e.v0, e.v1)
    # Stubs attach their high endpoint; positive length only.
    stub_cuts: list[tuple[int, int, float]] = []  # (edge, high vertex, t_cut)
    for ei in stub_ids:
        e = graph.edges[ei]
        hi_v = e.v0 if e.c0 > e.c1 else e.v1
        t_cut = e.cut_param(r)
        t_hi = e.endpoint_param(hi_v)
        cut_pt = e.curve.point(t_cut)
        if cut_pt.dist(graph.vertices[hi_v].point) <= 1e-12 * scale:
            continue
        fat_vertices.add(hi_v)
        find(hi_v)
        stub_cuts.append((ei, hi_v, t_cut))

    comp_of: dict[int, int] = {}
    comp_roots: list[int] = []
    for v in sorted(fat_vertices):
        root = find(v)
        if root not in comp_of:
            comp_of[root] = len(comp_roots)
            comp_roots.append(root)
    n_comp = len(comp_roots)

    walks = [Walk() for _ in range(n_comp)]
    comp_of_mv: dict[int, int] = {}
    for v in fat_vertices:
        ci = comp_of[find(v)]
        comp_of_mv[v] = ci
        walks[ci].add_node(graph.vertices[v].point, v)
    for ei in fat_full:
        e = graph.edges[ei]
        w = walks[comp_of_mv[e.v0]]
        a = w.node_of_mv[e.v0]
        b = w.node_of_mv[e.v1]
        w.add_edge(a, b, e.curve, e.site_left, e.site_right)
    for ei, hi_v, t_cut in stub_cuts:
        e = graph.edges[ei]
        w = walks[comp_of_mv[hi_v]]
        cut_pt = e.curve.point(t_cut)
        cut_node = w.add_node(cut_pt, None)
        hi_node = w.node_of_mv[hi_v]
        if hi_v == e.v1:
            w.add_edge(cut_node, hi_node, e.curve.sub(t_cut, 1.0),
                       e.site_left, e.site_right)
        else:
            w.add_edge(hi_node, cut_node, e.curve.sub(0.0, t_cut),
                       e.site_left, e.site_right)
    # Drop vertex-only walks: they are degenerate points, not regions.
    degenerate_points: list[Point] = []
    live_walks: list[Walk] = []
    live_index: dict[int, int] = {}
    for ci, w in enumerate(walks):
        if w.edges:
            live_index[ci] = len(live_walks)
            live_walks.append(w)
        else:
            degenerate_points.append(w.nodes[0].point)

    regions = [erode_region(w, r, scale) for w in live_walks]

    # Level chains.
    level_adj: dict[int, list[int]] = {}
    for ei in level_ids:
        e = graph.edges[ei]
        level_adj.setdefault(e.v0, []).append(ei)
        level_adj.setdefault(e.v1, []).append(ei)
    for v, lst in level_adj.items():
        if len(lst) > 2:
            raise StructuralError("level set branches; chain expected")

    def vertex_attached(v: int) -> bool:
        return v in fat_vertices

    tendrils: list[SkeletonCurve] = []
    handles: list[SkeletonCurve] = []
    degenerate_curves: list[SkeletonCurve] = []
    seen_level: set[int] = set()

    # Chains break at fat-attached vertices too: two corridors meeting at
    # one junction must give two attached chains, not one through-chain.
    def chain_endpoint(v: int) -> bool:
        return len(level_adj[v]) == 1 or v in fat_vertices

    starts = [(v, ei) for v in sorted(level_adj) if chain_endpoint(v)
              for ei in level_adj[v]]
    for start_v, first_edge in starts:
        if first_edge in seen_level:
            continue
        chain_edges: list[int] = []
        v = start_v
        ei = first_edge
        while True:
            seen_level.add(ei)
            chain_edges.append(ei)
            v = graph.edges[ei].other(v)
            if chain_endpoint(v):
                break
            nxt = [k for k in level_adj[v] if k not in seen_level]
            if not nxt:
                break
            ei = nxt[0]
        end_v = v
        att0, att1 = vertex_attached(start_v), vertex_attached(end_v)
        if att1 and not att0:
            chain_edges.reverse()
            start_v, end_v = end_v, start_v
            att0, att1 = att1, att0
        pieces = []
        v = start_v
        for ei in chain_edges:
            e = graph.edges[ei]
            if not isinstance(e.curve, SegmentCurve):
                raise StructuralError("curved level chain piece")
            if v == e.v0:
                pieces.append((e.curve, e.site_left, e.site_right))
            else:
                pieces.append((e.curve.rev(), e.site_right, e.site_left))
            v = e.other(v)
        n_att = int(att0) + int(att1)
        family = {0: None, 1: "gamma1", 2: "gamma2"}[n_att]
        sk = SkeletonCurve(tuple(pieces), r, family, att0, att1,
                           start_v, end_v)
        if n_att == 1:
            tendrils.append(sk)
        elif n_att == 2:
            handles.append(sk)
        else:
            degenerate_curves.append(sk)

    # Isolated qualifying vertices: in no fat piece and on no level chain.
    for vi, mv in enumerate(graph.vertices):
        if mv.clearance >= r - eps and vi not in fat_vertices \
                and vi not in level_adj:
            degenerate_points.append(mv.point)

    degenerate_points.sort(key=lambda p: (p.x, p.y))
    deg_pt = degenerate_points[0] if degenerate_points else None
    deg_curve = degenerate_curves[0] if degenerate_curves else None
    extra: list[object] = degenerate_points[1:] + degenerate_curves[1:]

    return ParallelStructure(r, regions, tendrils, handles, deg_pt,
                             deg_curve, graph, live_walks, extra)
