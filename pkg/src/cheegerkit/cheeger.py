"""Cheeger constant and the isoperimetric profile.

The Cheeger constant of a polygon comes from a one-dimensional root
problem: pi rho^2 = |inner body at rho| has a unique positive root,
and when the inner body is connected at that root the constant is its
reciprocal.  The profile J(V) = least perimeter at prescribed area V
follows for V above the minimal Cheeger volume by searching the
curvature for which V is attainable and reading off the minimizer's
perimeter; the value function G(kappa) = -min F_kappa closes the loop
through Legendre duality, which is verified rather than trusted.

Volumes and perimeters inside the searches are evaluated through the
Steiner bookkeeping of the eroded cores, so no boundary is assembled
until a row's final minimizer is built.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (CharacterizationError, StructuralError,
                     VolumeRangeError)
from .geometry import REL_TOL_DEGEN
from .medial import MedialGraph, build_medial
from .minimizers import (CurvatureProblem, MinimizerSet, maximal_minimizer,
                         minimal_minimizer, solve_for_volume)
from .parallel import (ParallelStructure, disconnection_bands, erode,
                       has_no_neck, inner_area)
from .polygon import JordanPolygon

_ROOT_REL_TOL = 1e-12
_BRACKET_REL_TOL = 1e-15
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class CheegerResult:
    h: float
    r: float
    cheeger_max: MinimizerSet
    cheeger_min: MinimizerSet
    residual: float  # |pi r^2 - |inner body|| at the root


@dataclass(frozen=True)
class ProfileRow:
    volume: float
    j: float
    kappa: float  # inf on the exact full-domain endpoint row
    t: float | None
    interval: tuple[float, float] | None  # (|E^m|, |E^M|) when they differ
    interpolated: bool = False  # closed by the monotone endpoint gap


@dataclass
class ProfileTable:
    rows: list[ProfileRow]
    v_min: float
    v_max: float
    g_samples: list[tuple[float, float]]
    polygon: JordanPolygon
    graph: MedialGraph = field(repr=False)


def _steiner_volumes(structure: ParallelStructure) -> tuple[float, float, float, float]:
    """(|E^m|, |E^M|, P(E^m), P(E^M)) via Steiner, no dilation built."""
    r = structure.r
    base = inner_area(structure)
    content = sum(c.perimeter() for c in structure.interior_components)
    content += 2.0 * sum(h.length for h in structure.handles)
    tendril = 2.0 * sum(t.length for t in structure.tendrils)
    cap = math.pi * r * r
    v_min = base + r * content + cap
    v_max = v_min + r * tendril
    return v_min, v_max, content + 2.0 * math.pi * r, content + tendril + 2.0 * math.pi * r


def solve_cheeger(polygon: JordanPolygon,
                  graph: MedialGraph | None = None) -> CheegerResult:
    """Root of pi rho^2 = |inner body at rho|, then the minimizers at
    the reciprocal curvature.

    The mismatch f(rho) = pi rho^2 - |inner body| is strictly
    increasing, negative near zero, positive at the inradius; critical
    clearances seed the bracket so the bisection never straddles a
    kink longer than it must.
    """
    if graph is None:
        graph = build_medial(polygon)

    def f(rho: float) -> float:
        return math.pi * rho * rho - inner_area(erode(graph, rho))

    lo = 0.0  # f -> -|polygon| as rho -> 0; never evaluated at 0
    hi = graph.inradius
    for c in graph.critical_clearances():
        v = f(c)
        if v < 0.0:
            lo = c
        else:
            hi = c
            break
    while hi - lo > _ROOT_REL_TOL * hi:
        mid = 0.5 * (lo + hi)
        if f(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    rho = 0.5 * (lo + hi)

    residual = abs(f(rho))
    if residual > 1e-10 * polygon.area():
        raise StructuralError(
            f"root residual {residual} too large at rho = {rho}")
    if not has_no_neck(graph, rho):
        band = next((b for b in disconnection_bands(graph)
                     if b[0] < rho <= b[1]), None)
        raise CharacterizationError(
            f"inner body disconnected at the volume-balance radius {rho}; "
            "the reciprocal is only an upper bound for the Cheeger constant",
            band)

    h = 1.0 / rho
    problem = CurvatureProblem(polygon, h, graph=graph)
    structure = erode(graph, rho)
    c_max = maximal_minimizer(problem, structure)
    c_min = minimal_minimizer(problem, structure)
    for m in (c_max, c_min):
        ratio = m.perimeter / m.volume
        if abs(ratio - h) > 1e-9 * h:
            raise StructuralError(
                f"Cheeger set ratio {ratio} disagrees with h = {h}")
    return CheegerResult(h, rho, c_max, c_min, residual)


def _band_snap(graph: MedialGraph, r: float) -> float:
    """Snap r onto a critical clearance when it falls in its level band.

    Inside the band the eroded walks mix pieces of clearance r with
    nodes at the critical value, so their Steiner numbers drift by the
    band width; at the critical itself they are exact.  The curvature
    family there is neutral for the value function, so evaluating the
    frozen-family endpoints loses only a second-order term.
    """
    margin = 2.0 * REL_TOL_DEGEN * graph.polygon.scale()
    best = min(graph.critical_clearances(),
               key=lambda c: abs(c - r), default=None)
    if best is not None and abs(best - r) <= margin:
        return best
    return r


def g_of_kappa(polygon: JordanPolygon, kappa: float,
               graph: MedialGraph | None = None) -> float:
    """Value function G(kappa) = kappa|E^M| - P(E^M) = -min F_kappa.

    Nonnegative for kappa at or above the Cheeger constant, zero
    there; errors from the minimizer guards propagate.
    """
    problem = CurvatureProblem(polygon, kappa, graph=graph)
    r = _band_snap(problem.graph, problem.r)
    if r != problem.r:
        frozen = CurvatureProblem(polygon, 1.0 / r, graph=problem.graph)
        st = frozen.structure()
        hi = maximal_minimizer(frozen, st)
        lo = minimal_minimizer(frozen, st)
        return max(kappa * hi.volume - hi.perimeter,
                   kappa * lo.volume - lo.perimeter)
    m = maximal_minimizer(problem, problem.structure())
    return kappa * m.volume - m.perimeter


def _g_steiner(graph: MedialGraph, kappa: float) -> float:
    """G via Steiner volumes only; guards already verified by caller."""
    r = _band_snap(graph, 1.0 / kappa)
    v_min, v_max, p_min, p_max = _steiner_volumes(erode(graph, r))
    return max(kappa * v_max - p_max, kappa * v_min - p_min)


def isoperimetric_profile(polygon: JordanPolygon, v_grid: list[float],
                          graph: MedialGraph | None = None) -> ProfileTable:
    """Least-perimeter values J(V) for each requested volume.

    Valid when the inner body stays connected for every radius up to
    the Cheeger radius.  Rows where the maximal and minimal volumes
    differ carry the attainable interval, exposing the affine segments
    of J.  The table always closes with the exact full-domain row.
    """
    if graph is None:
        graph = build_medial(polygon)
    scale = polygon.scale()
    v_omega = polygon.area()
    p_omega = polygon.perimeter()

    base = solve_cheeger(polygon, graph)
    rho_h = base.r
    bad = [b for b in disconnection_bands(graph) if b[0] < rho_h]
    if bad:
        raise CharacterizationError(
            "profile needs a connected inner body at every radius up to "
            f"the Cheeger radius {rho_h}", bad[0])

    v_min = base.cheeger_min.volume
    r_floor = 1e-6 * scale
    criticals = graph.critical_clearances()

    def volumes(r: float) -> tuple[float, float]:
        vm, vM, _, _ = _steiner_volumes(erode(graph, r))
        return vm, vM

    slack = 1e-9 * v_omega
    tight = 1e-13 * v_omega  # acceptance for the radius search
    vm_hi, vM_hi = volumes(rho_h)
    rows: list[ProfileRow] = []
    pending: list[float] = []  # volumes requiring r below the floor
    for v in sorted(v_grid):
        if v < v_min - slack or v > v_omega + slack:
            raise VolumeRangeError(v, v_min, v_omega)
        if v >= v_omega - slack:
            continue  # merged into the exact endpoint row
        if v <= vM_hi + slack:
            r_star = rho_h
        else:
            lo, hi = r_floor, rho_h
            vm_lo, vM_lo = volumes(lo)
            if v > vM_lo:
                pending.append(v)
                continue
            r_star = None
            while hi - lo > _BRACKET_REL_TOL * hi:
                mid = 0.5 * (lo + hi)
                vm, vM = volumes(mid)
                if vm > v + tight:
                    lo = mid
                elif vM < v - tight:
                    hi = mid
                else:
                    r_star = mid
                    break
            # Within the level band around a critical clearance the
            # eroded walks carry nodes whose clearance differs from r
            # by up to the band width, so built sets are only exact at
            # the critical itself.  Snap there whenever the critical's
            # window still covers v; a pinched bracket converges to a
            # band edge, hence the widened search.
            pivot = 0.5 * (lo + hi) if r_star is None else r_star
            margin = 2.0 * REL_TOL_DEGEN * scale
            for c in sorted(criticals, key=lambda c: abs(c - pivot)):
                if abs(c - pivot) > margin:
                    break
                vm_c, vM_c = volumes(c)
                if vm_c - slack <= v <= vM_c + slack:
                    r_star = c
                    break
            if r_star is None:
                raise StructuralError(
                    "no clearance attains the requested volume "
                    f"{v}; the attainable windows leave a gap")
        kappa = 1.0 / r_star
        problem = CurvatureProblem(polygon, kappa, graph=graph)
        structure = erode(graph, r_star)
        vm, vM = volumes(r_star)
        mset = solve_for_volume(problem, structure, min(max(v, vm), vM))
        interval = (vm, vM) if vM - vm > slack else None
        rows.append(ProfileRow(v, mset.perimeter, kappa, mset.t, interval))

    if pending:
        anchor = rows[-1] if rows else ProfileRow(
            v_min, base.cheeger_min.perimeter, base.h, 0.0, None)
        dv = v_omega - anchor.volume
        for v in pending:
            j = anchor.j + (p_omega - anchor.j) * (v - anchor.volume) / dv
            rows.append(ProfileRow(v, j, math.inf, None, None,
                                   interpolated=True))

    rows.append(ProfileRow(v_omega, p_omega, math.inf, None, None))
    rows.sort(key=lambda rw: rw.volume)
    dedup: list[ProfileRow] = []
    for rw in rows:
        if dedup and rw.volume - dedup[-1].volume <= slack:
            continue
        dedup.append(rw)

    kappas = sorted({base.h}
                    | {rw.kappa for rw in dedup if math.isfinite(rw.kappa)})
    k_hi = max(kappas) * 2.0
    n_fill = 24
    grid = [base.h * (k_hi / base.h) ** (i / (n_fill - 1.0))
            for i in range(n_fill)]
    g_samples = sorted({k: None for k in kappas + grid})
    g_samples = [(k, _g_steiner(graph, k)) for k in g_samples]

    return ProfileTable(dedup, v_min, v_omega, g_samples, polygon, graph)


def legendre_check(table: ProfileTable) -> float:
    """Max over rows of |J(V) - sup_k (kV - G(k))|.

    The sup runs over the sampled curvature grid and is then polished
    by golden-section around the best sample with live G evaluations.
    """
    graph = table.graph
    worst = 0.0
    ks = [k for k, _ in table.g_samples]
    gs = dict(table.g_samples)
    for row in table.rows:
        if row.interpolated or not math.isfinite(row.kappa):
            continue
        v = row.volume

        def phi(k: float) -> float:
            if k not in gs:
                gs[k] = _g_steiner(graph, k)
            return k * v - gs[k]

        best_i = max(range(len(ks)), key=lambda i: phi(ks[i]))
        lo = ks[max(0, best_i - 1)]
        hi = ks[min(len(ks) - 1, best_i + 1)]
        a, b = lo, hi
        x1 = b - _GOLDEN * (b - a)
        x2 = a + _GOLDEN * (b - a)
        f1, f2 = phi(x1), phi(x2)
        for _ in range(60):
            if b - a <= 1e-12 * max(1.0, b):
                break
            if f1 < f2:
                a, x1, f1 = x1, x2, f2
                x2 = a + _GOLDEN * (b - a)
                f2 = phi(x2)
            else:
                b, x2, f2 = x2, x1, f1
                x1 = b - _GOLDEN * (b - a)
                f1 = phi(x1)
        sup = max(phi(ks[best_i]), f1, f2)
        worst = max(worst, abs(row.j - sup))
    return worst


def profile_convexity_defect(table: ProfileTable) -> float:
    """Most negative slope increment of J over consecutive rows; a
    convex profile keeps this above a small negative tolerance."""
    rows = table.rows
    worst = 0.0
    for p, q, s in zip(rows, rows[1:], rows[2:]):
        s1 = (q.j - p.j) / (q.volume - p.volume)
        s2 = (s.j - q.j) / (s.volume - q.volume)
        worst = min(worst, s2 - s1)
    return worst


def g_convexity_defect(table: ProfileTable) -> float:
    samples = table.g_samples
    worst = 0.0
    for (k1, g1), (k2, g2), (k3, g3) in zip(samples, samples[1:], samples[2:]):
        s1 = (g2 - g1) / (k2 - k1)
        s2 = (g3 - g2) / (k3 - k2)
        worst = min(worst, s2 - s1)
    return worst
