"""Sets minimizing perimeter minus kappa times area inside a polygon.

For kappa at or above the Cheeger constant, and when the inner body at
radius r = 1/kappa is connected, every minimizer is squeezed between
two explicit sets: the dilation of the full inner body (maximal) and
the dilation of its closed-interior part plus bridge chains (minimal).
Between them sits a one-parameter family obtained by growing every
tendril chain simultaneously to arclength fraction t; the area grows
affinely (each unit of grown chain sweeps a 2r strip) while the
functional value stays constant.

Everything here is exact arc-and-segment geometry.  Areas and
perimeters are computed twice, once from the Steiner bookkeeping of
the pre-dilation core and once from the assembled boundary, and the
two must agree to nine digits; a disagreement is a bug, never a
tolerance to widen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (CharacterizationError, DomainError, StructuralError,
                     SubcriticalError, VolumeRangeError)
from .geometry import REL_TOL, REL_TOL_DEGEN, ArcRegion, Point
from .medial import MedialGraph, build_medial
from .polygon import JordanPolygon
from .parallel import (ParallelStructure, SkeletonCurve, Walk,
                       dilate_region, disconnection_bands, erode,
                       has_no_neck, inner_area)


@dataclass
class CurvatureProblem:
    """One curvature value over one polygon; owns the medial graph.

    The graph can be shared across problems on the same polygon to
    avoid recomputing it per kappa.
    """

    polygon: JordanPolygon
    kappa: float
    graph: MedialGraph | None = None

    def __post_init__(self) -> None:
        if not (self.kappa > 0.0) or not math.isfinite(self.kappa):
            raise DomainError(f"kappa must be positive, got {self.kappa}")
        if self.graph is None:
            self.graph = build_medial(self.polygon)

    @property
    def r(self) -> float:
        return 1.0 / self.kappa

    def structure(self) -> ParallelStructure:
        return erode(self.graph, self.r)


@dataclass(frozen=True)
class MinimizerCore:
    """Pre-dilation compact set: interior components plus chain pieces.

    ``chains`` pairs each skeleton chain with the grown arclength
    fraction; bridges are always full, tendrils carry the family
    parameter.
    """

    regions: tuple[ArcRegion, ...]
    chains: tuple[tuple[SkeletonCurve, float], ...]

    def area(self) -> float:
        return sum(c.area() for c in self.regions)

    def boundary_content(self) -> float:
        """Outer Minkowski content: region perimeters plus both sides
        of every grown chain."""
        return (sum(c.perimeter() for c in self.regions)
                + sum(2.0 * ch.length * ext for ch, ext in self.chains))


@dataclass(frozen=True)
class MinimizerSet:
    region: ArcRegion
    role: str  # "maximal" | "minimal" | "interpolant"
    t: float | None
    volume: float
    perimeter: float
    f_value: float
    core: MinimizerCore
    witness: Point  # center of an inscribed disk of radius r


@dataclass(frozen=True)
class InvariantReport:
    entries: tuple[tuple[str, bool, str], ...]

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.entries)

    def failures(self) -> list[str]:
        return [name for name, passed, _ in self.entries if not passed]


def _check_applicable(problem: CurvatureProblem,
                      structure: ParallelStructure) -> None:
    """Guards, in order: structure consistency, subcritical curvature,
    neck at r.  Degenerate inner bodies cannot survive these."""
    r = problem.r
    graph = problem.graph
    if abs(structure.r - r) > REL_TOL * max(r, 1.0):
        raise StructuralError(
            f"structure eroded at {structure.r}, problem wants {r}")
    area = inner_area(structure)
    slack = 1e-9 * problem.polygon.area()
    if math.pi * r * r > area + slack:
        raise SubcriticalError(problem.kappa)
    if not has_no_neck(graph, r):
        band = next((b for b in disconnection_bands(graph)
                     if b[0] < r <= b[1] + REL_TOL_DEGEN), None)
        raise CharacterizationError(
            f"inner body disconnected at radius {r}", band)
    if structure.degenerate_point is not None \
            or structure.degenerate_curve is not None:
        raise StructuralError(
            "degenerate inner piece survived the applicability guards")


def _add_chain(mw: Walk, chain: SkeletonCurve, extent: float) -> None:
    pieces = chain.pieces if extent >= 1.0 else tuple(chain.prefix(extent))
    if not pieces:
        return
    cur = mw.node_of_mv[chain.mv_start]
    for i, (curve, sl, sr) in enumerate(pieces):
        closes = (extent >= 1.0 and chain.attached_end
                  and i == len(pieces) - 1)
        nxt = (mw.node_of_mv[chain.mv_end] if closes
               else mw.add_node(curve.point(1.0), None))
        mw.add_edge(cur, nxt, curve, sl, sr)
        cur = nxt


def _merged_walk(structure: ParallelStructure, extent: float) -> Walk:
    mw = Walk()
    for w in structure.walks:
        idx = [mw.add_node(nd.point, nd.mv) for nd in w.nodes]
        for e in w.edges:
            mw.add_edge(idx[e.a], idx[e.b], e.curve, e.site_left, e.site_right)
    for h in structure.handles:
        _add_chain(mw, h, 1.0)
    if extent > 0.0:
        for td in structure.tendrils:
            _add_chain(mw, td, extent)
    return mw


def _witness(problem: CurvatureProblem) -> Point:
    best = max(problem.graph.vertices, key=lambda v: v.clearance)
    return best.point


def _build_set(problem: CurvatureProblem, structure: ParallelStructure,
               role: str, extent: float) -> MinimizerSet:
    scale = problem.polygon.scale()
    r = problem.r
    mw = _merged_walk(structure, extent)
    region = dilate_region(mw, scale)

    chains = tuple([(h, 1.0) for h in structure.handles]
                   + [(td, extent) for td in structure.tendrils])
    core = MinimizerCore(tuple(structure.interior_components), chains)
    content = core.boundary_content()
    volume = core.area() + r * content + math.pi * r * r
    perimeter = content + 2.0 * math.pi * r

    v_direct = region.area()
    p_direct = region.perimeter()
    if abs(v_direct - volume) > 1e-9 * max(1.0, volume) \
            or abs(p_direct - perimeter) > 1e-9 * max(1.0, perimeter):
        raise StructuralError(
            f"Steiner bookkeeping disagrees with built boundary: "
            f"area {volume} vs {v_direct}, perimeter {perimeter} vs {p_direct}")

    t = extent if role == "interpolant" else None
    return MinimizerSet(region, role, t, volume, perimeter,
                        perimeter - problem.kappa * volume, core,
                        _witness(problem))


def maximal_minimizer(problem: CurvatureProblem,
                      structure: ParallelStructure) -> MinimizerSet:
    """Union of all minimizers: dilation of the whole inner body."""
    _check_applicable(problem, structure)
    return _build_set(problem, structure, "maximal", 1.0)


def minimal_minimizer(problem: CurvatureProblem,
                      structure: ParallelStructure) -> MinimizerSet:
    """Dilation of the closed interior plus bridge chains; tendrils
    dropped.  Coincides with the maximal set exactly when there are no
    tendrils, which is the uniqueness criterion."""
    _check_applicable(problem, structure)
    return _build_set(problem, structure, "minimal", 0.0)


def interpolant(problem: CurvatureProblem, structure: ParallelStructure,
                t: float) -> MinimizerSet:
    """Family member A_t: every tendril grown to arclength fraction t.

    A_0 is the minimal set, A_1 the maximal one; the functional value
    is constant in t and the volume affine.
    """
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"family parameter {t} outside [0, 1]")
    _check_applicable(problem, structure)
    return _build_set(problem, structure, "interpolant", t)


def solve_for_volume(problem: CurvatureProblem, structure: ParallelStructure,
                     volume: float) -> MinimizerSet:
    """Minimizer of prescribed area, via the affine strip growth law."""
    _check_applicable(problem, structure)
    gap = 2.0 * problem.r * sum(td.length for td in structure.tendrils)
    v_min = _build_set(problem, structure, "minimal", 0.0).volume
    v_max = v_min + gap
    tol = 1e-10 * problem.polygon.area()
    if not v_min - tol <= volume <= v_max + tol:
        raise VolumeRangeError(volume, v_min, v_max)
    t = 0.0 if gap == 0.0 else min(1.0, max(0.0, (volume - v_min) / gap))
    out = _build_set(problem, structure, "interpolant", t)
    if abs(out.volume - volume) > tol:
        raise StructuralError(
            f"volume solve missed target: {out.volume} vs {volume}")
    return out


def verify_minimizer_invariants(mset: MinimizerSet,
                                problem: CurvatureProblem) -> InvariantReport:
    """Structural facts every minimizer must satisfy, checked directly
    on the assembled boundary."""
    r = problem.r
    scale = problem.polygon.scale()
    eps = REL_TOL * scale
    eps_deg = REL_TOL_DEGEN * scale
    entries: list[tuple[str, bool, str]] = []

    arcs = [e for lp in mset.region.all_loops() for e in lp.edges if e.is_arc]
    segs = [e for lp in mset.region.all_loops() for e in lp.edges
            if not e.is_arc]
    bad_radius = [e for e in arcs if abs(e.radius - r) > 10.0 * eps]
    entries.append(("interior arcs have radius 1/kappa", not bad_radius,
                    f"{len(arcs)} arcs, {len(bad_radius)} off-radius"))

    bad_len = [e for e in arcs if e.length() > math.pi * r + 10.0 * eps]
    entries.append(("arc length at most pi/kappa", not bad_len,
                    f"max sweep {max((abs(e.sweep) for e in arcs), default=0.0):.6f}"))

    off_wall = [e for e in segs
                if problem.polygon.boundary_distance(e.midpoint()) > eps_deg]
    entries.append(("straight pieces lie on the polygon boundary",
                    not off_wall, f"{len(segs)} segments"))

    vol_floor = 4.0 * math.pi * r * r
    vols = [lp.area() for lp in mset.region.outer]
    entries.append(("component volume at least 4*pi/kappa^2",
                    all(v >= vol_floor - 1e-9 for v in vols),
                    f"min component {min(vols):.6g} vs floor {vol_floor:.6g}"))

    w_ok = (mset.region.contains_point(mset.witness)
            and mset.region.distance_to_boundary(mset.witness) >= r - eps_deg)
    entries.append(("contains a disk of radius 1/kappa", w_ok,
                    f"witness {mset.witness}"))

    graph = problem.graph
    probes = [v.point for v in graph.vertices if v.clearance > r + eps_deg]
    for e in graph.edges:
        m = e.curve.point(0.5)
        if e.clearance(0.5) > r + eps_deg:
            probes.append(m)
    rolled = [p for p in probes
              if mset.region.distance_to_boundary(p) < r - eps_deg
              or not mset.region.contains_point(p)]
    entries.append(("every deep medial disk is contained", not rolled,
                    f"{len(probes)} probes, {len(rolled)} escaped"))

    return InvariantReport(tuple(entries))
