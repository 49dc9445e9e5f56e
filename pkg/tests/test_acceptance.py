"""Acceptance gate: ten numbered criteria, one test per criterion.

Run ``pytest -v tests/test_acceptance.py`` to get a pass/fail line per
criterion.  Tolerances are part of the contract and must not be
loosened here.
"""

import math

import pytest

from cheegerkit import domains
from cheegerkit.cheeger import (g_convexity_defect, isoperimetric_profile,
                                legendre_check, profile_convexity_defect,
                                solve_cheeger)
from cheegerkit.errors import CharacterizationError
from cheegerkit.geometry import Point
from cheegerkit.medial import build_medial
from cheegerkit.minimizers import (CurvatureProblem, interpolant,
                                   maximal_minimizer, minimal_minimizer,
                                   verify_minimizer_invariants)
from cheegerkit.parallel import disconnection_bands, erode, has_no_neck, \
    inner_area
from cheegerkit.raster import (oracle_erode, oracle_no_neck,
                               oracle_perimeter, rasterize)

ALL_FIXTURES = [
    domains.unit_square, domains.rectangle, domains.equilateral_triangle,
    domains.l_shape, domains.keyed_square, domains.staircase,
    domains.dumbbell, domains.bridged_squares,
]


def minimizer_pair(poly, kappa, graph=None):
    pb = CurvatureProblem(poly, kappa, graph=graph)
    st = pb.structure()
    return pb, st, minimal_minimizer(pb, st), maximal_minimizer(pb, st)


def test_criterion_01_inner_cheeger_constants(square_graph, rect_graph,
                                              gon720, gon720_graph):
    h_sq = solve_cheeger(domains.unit_square(), square_graph).h
    assert abs(h_sq - (2.0 + math.sqrt(math.pi))) <= 1e-9
    rho = (3.0 - math.sqrt(1.0 + 2.0 * math.pi)) / (4.0 - math.pi)
    h_rc = solve_cheeger(domains.rectangle(), rect_graph).h
    assert abs(h_rc - 1.0 / rho) <= 1e-9
    h_gon = solve_cheeger(gon720, gon720_graph).h
    assert abs(h_gon - 2.0) <= 1e-3


def test_criterion_02_square_maximal_minimizer(square_graph):
    r = 0.2
    area = 1.0 - (4.0 - math.pi) * r * r
    perim = 4.0 - (8.0 - 2.0 * math.pi) * r
    f_val = perim - 5.0 * area
    _, _, _, mx = minimizer_pair(domains.unit_square(), 5.0, square_graph)
    assert abs(mx.volume - area) <= 1e-9 * area
    assert abs(mx.perimeter - perim) <= 1e-9 * perim
    assert abs(mx.f_value - f_val) <= 1e-9 * abs(f_val)


def test_criterion_03_uniqueness_clause(square_graph, keyed_graph):
    sq = domains.unit_square()
    for kappa in (4.2, 5.0, 6.0, 9.0):
        _, st, mn, mx = minimizer_pair(sq, kappa, square_graph)
        assert not st.tendrils
        assert abs(mx.volume - mn.volume) <= 1e-12
    _, st, mn, mx = minimizer_pair(domains.keyed_square(), 10.0, keyed_graph)
    assert st.tendrils
    assert abs((mx.volume - mn.volume) - 0.1) <= 1e-6


def test_criterion_04_family_constant_f_affine_volume(keyed_graph):
    pb, st, mn, mx = minimizer_pair(domains.keyed_square(), 10.0, keyed_graph)
    gap = mx.volume - mn.volume
    for i in range(11):
        t = i / 10.0
        a = interpolant(pb, st, t)
        assert abs(a.f_value - mx.f_value) <= 1e-9 * abs(mx.f_value)
        assert abs(a.volume - (mn.volume + t * gap)) <= 1e-8


def test_criterion_05_structural_invariant_suite():
    fixtures = [domains.unit_square, domains.rectangle,
                domains.keyed_square, domains.l_shape]
    for make in fixtures:
        poly = make()
        graph = build_medial(poly)
        for kappa in (4.2, 6.0, 9.0):
            pb = CurvatureProblem(poly, kappa, graph=graph)
            st = pb.structure()
            for mset in (minimal_minimizer(pb, st),
                         maximal_minimizer(pb, st)):
                rep = verify_minimizer_invariants(mset, pb)
                assert rep.ok, (make.__name__, kappa, rep.failures())


def test_criterion_06_nestedness(square_graph, keyed_graph):
    cases = [
        (domains.unit_square(), 4.2, square_graph),
        (domains.keyed_square(), 10.0, keyed_graph),
    ]
    for poly, k1, graph in cases:
        _, _, mn1, mx1 = minimizer_pair(poly, k1, graph)
        _, _, mn2, mx2 = minimizer_pair(poly, 1.5 * k1, graph)
        xmin, ymin, xmax, ymax = poly.bbox()
        violations = 0
        for i in range(100):
            for j in range(100):
                p = Point(xmin + (xmax - xmin) * (i + 0.5) / 100,
                          ymin + (ymax - ymin) * (j + 0.5) / 100)
                chain = [region.contains_point(p) for region in
                         (mn1.region, mx1.region, mn2.region, mx2.region)]
                if any(a and not b for a, b in zip(chain, chain[1:])):
                    violations += 1
        assert violations == 0
        # strict growth while the larger set has room left
        assert poly.area() > mx1.volume
        assert mn2.volume > mx1.volume


def test_criterion_07_square_profile(square_graph):
    sq = domains.unit_square()
    res = solve_cheeger(sq, square_graph)
    v_min = res.cheeger_min.volume
    grid = [v_min + (1.0 - v_min) * i / 49 for i in range(50)]
    tab = isoperimetric_profile(sq, grid, square_graph)
    assert len(tab.rows) == 50
    assert legendre_check(tab) <= 1e-6
    assert profile_convexity_defect(tab) >= -1e-8
    assert g_convexity_defect(tab) >= -1e-8
    assert tab.rows[-1].volume == 1.0 and tab.rows[-1].j == 4.0


def test_criterion_08_affine_segments(keyed_graph, staircase_graph):
    ks = domains.keyed_square()
    _, _, mn, mx = minimizer_pair(ks, 10.0, keyed_graph)
    grid = [mn.volume + (mx.volume - mn.volume) * i / 5 for i in range(6)]
    tab = isoperimetric_profile(ks, grid, keyed_graph)
    seg = [r for r in tab.rows if r.interval is not None]
    assert len(seg) == 6
    for a, b in zip(seg, seg[1:]):
        slope = (b.j - a.j) / (b.volume - a.volume)
        assert abs(slope - 10.0) <= 1e-6

    sc = domains.staircase()
    windows = {}
    for kappa in (4.0, 8.0):
        _, _, lo, hi = minimizer_pair(sc, kappa, staircase_graph)
        windows[kappa] = (lo.volume, hi.volume)
    assert windows[4.0][1] < windows[8.0][0]  # disjoint
    grid = [lo + (hi - lo) * u
            for lo, hi in windows.values() for u in (0.1, 0.5, 0.9)]
    tab = isoperimetric_profile(sc, grid, staircase_graph)
    for kappa in (4.0, 8.0):
        rows = [r for r in tab.rows
                if r.interval and abs(r.kappa - kappa) < 1e-6]
        assert len(rows) == 3
        for a, b in zip(rows, rows[1:]):
            slope = (b.j - a.j) / (b.volume - a.volume)
            assert abs(slope - kappa) <= 1e-6


def test_criterion_09_dumbbell_neck_detection(dumbbell_graph):
    db = domains.dumbbell()
    with pytest.raises(CharacterizationError):
        solve_cheeger(db, dumbbell_graph)
    bands = disconnection_bands(dumbbell_graph)
    assert len(bands) == 1
    lo, hi = bands[0]
    assert abs(lo - 0.05) <= 1e-6
    assert abs(hi - 0.5) <= 1e-6
    # independent raster confirmation on both sides of the band edge
    inside = rasterize(db, 2000, r_max=0.25)
    assert oracle_no_neck(inside, 0.2) is False
    below = rasterize(db, 2000, r_max=0.05)
    assert oracle_no_neck(below, 0.04) is True


def test_criterion_10_oracle_cross_validation(keyed_graph):
    for make in ALL_FIXTURES:
        poly = make()
        graph = build_medial(poly)
        r = 0.5 * graph.inradius
        mask = rasterize(poly, 1000, r_max=r)
        assert abs(mask.area() - poly.area()) <= 0.02 * poly.area()
        assert (abs(oracle_perimeter(mask) - poly.perimeter())
                <= 0.03 * poly.perimeter())
        assert oracle_no_neck(mask, r) == has_no_neck(graph, r), make.__name__

    exact = inner_area(erode(keyed_graph, 0.2))
    errs = []
    for res in (250, 500, 1000):
        m = rasterize(domains.keyed_square(), res, r_max=0.2)
        errs.append(abs(oracle_erode(m, 0.2).area() - exact))
    assert errs[1] <= 0.75 * errs[0]
    assert errs[2] <= 0.75 * errs[1]
