import math

import pytest

from cheegerkit import domains
from cheegerkit.cheeger import (g_convexity_defect, g_of_kappa,
                                isoperimetric_profile, legendre_check,
                                profile_convexity_defect, solve_cheeger)
from cheegerkit.errors import CharacterizationError
from cheegerkit.minimizers import (CurvatureProblem, maximal_minimizer,
                                   minimal_minimizer)

SQUARE_H = 2.0 + math.sqrt(math.pi)
RECT_RHO = (3.0 - math.sqrt(1.0 + 2.0 * math.pi)) / (4.0 - math.pi)


def test_square_root(square_graph):
    res = solve_cheeger(domains.unit_square(), square_graph)
    assert res.r == pytest.approx(0.265079452134309425, abs=1e-12)
    assert res.h == pytest.approx(SQUARE_H, abs=1e-11)
    assert res.residual <= 1e-10
    assert abs(res.cheeger_max.volume - res.cheeger_min.volume) < 1e-12
    # the Cheeger ratio identity: perimeter = h * volume at the root
    assert res.cheeger_min.perimeter == pytest.approx(
        res.h * res.cheeger_min.volume, rel=1e-10)


def test_rectangle_root(rect_graph):
    res = solve_cheeger(domains.rectangle(), rect_graph)
    assert res.r == pytest.approx(RECT_RHO, abs=1e-12)
    assert res.h == pytest.approx(1.0 / RECT_RHO, abs=1e-11)


def test_keyed_root(keyed_graph):
    res = solve_cheeger(domains.keyed_square(), keyed_graph)
    assert res.r == pytest.approx(0.265441682185294143, abs=1e-12)
    assert res.h == pytest.approx(3.767305841973757130, abs=1e-11)


def test_720gon_root(gon720, gon720_graph):
    res = solve_cheeger(gon720, gon720_graph)
    assert res.h == pytest.approx(2.0, abs=1e-3)
    assert res.r == pytest.approx(0.499996033630870512, abs=1e-12)


def test_dumbbell_root_rejected(dumbbell_graph):
    with pytest.raises(CharacterizationError) as exc:
        solve_cheeger(domains.dumbbell(), dumbbell_graph)
    assert exc.value.band is not None


def test_g_values(square_graph):
    sq = domains.unit_square()
    assert abs(g_of_kappa(sq, SQUARE_H, square_graph)) < 1e-9
    assert g_of_kappa(sq, 5.0, square_graph) == pytest.approx(
        1.171681469282041352, abs=1e-12)


def test_square_profile(square_graph):
    sq = domains.unit_square()
    res = solve_cheeger(sq, square_graph)
    v_min = res.cheeger_min.volume
    grid = [v_min + (1.0 - v_min) * i / 12 for i in range(13)]
    tab = isoperimetric_profile(sq, grid, square_graph)
    vols = [r.volume for r in tab.rows]
    assert vols == sorted(vols)
    # exact endpoint row
    assert tab.rows[-1].volume == 1.0
    assert tab.rows[-1].j == 4.0
    assert math.isinf(tab.rows[-1].kappa)
    assert tab.rows[-1].t is None
    # Cheeger endpoint: J = h * v_min
    assert tab.rows[0].volume == pytest.approx(v_min, abs=1e-12)
    assert tab.rows[0].j == pytest.approx(res.h * v_min, rel=1e-9)
    assert legendre_check(tab) <= 1e-6
    assert profile_convexity_defect(tab) >= -1e-8
    assert g_convexity_defect(tab) >= -1e-8


def test_square_profile_hits_kappa5_perimeter(square_graph):
    tab = isoperimetric_profile(domains.unit_square(),
                                [0.965663706143591730], square_graph)
    row = tab.rows[0]
    assert row.j == pytest.approx(3.656637061435917295, abs=1e-9)
    assert row.kappa == pytest.approx(5.0, abs=1e-4)
    assert row.interval is None  # unique minimizer at this volume


def test_keyed_affine_segment(keyed_graph):
    ks = domains.keyed_square()
    vm, vM = 1.007123889803846899, 1.107123889803846899
    grid = [vm + (vM - vm) * i / 4 for i in range(5)]
    tab = isoperimetric_profile(ks, grid, keyed_graph)
    seg = [r for r in tab.rows if r.interval is not None]
    assert len(seg) >= 3
    assert all(r.kappa == pytest.approx(10.0, abs=1e-6) for r in seg)
    for a, b in zip(seg, seg[1:]):
        slope = (b.j - a.j) / (b.volume - a.volume)
        assert slope == pytest.approx(10.0, abs=1e-6)
    assert legendre_check(tab) <= 1e-6


def test_staircase_two_affine_segments(staircase_graph):
    sc = domains.staircase()
    segments = {}
    for kappa in (4.0, 8.0):
        pb = CurvatureProblem(sc, kappa, graph=staircase_graph)
        st = pb.structure()
        segments[kappa] = (minimal_minimizer(pb, st).volume,
                           maximal_minimizer(pb, st).volume)
    # the two affine windows are disjoint
    assert segments[4.0][1] < segments[8.0][0]
    grid = [lo + (hi - lo) * u
            for lo, hi in segments.values() for u in (0.2, 0.5, 0.8)]
    tab = isoperimetric_profile(sc, grid, staircase_graph)
    for kappa in (4.0, 8.0):
        rows = [r for r in tab.rows
                if r.interval and abs(r.kappa - kappa) < 1e-6]
        assert len(rows) == 3
        for a, b in zip(rows, rows[1:]):
            slope = (b.j - a.j) / (b.volume - a.volume)
            assert slope == pytest.approx(kappa, abs=1e-6)
    assert profile_convexity_defect(tab) >= -1e-8


def test_profile_g_samples_convex(keyed_graph):
    ks = domains.keyed_square()
    res = solve_cheeger(ks, keyed_graph)
    v_min = res.cheeger_min.volume
    v_max = ks.area()
    grid = [v_min + (v_max - v_min) * i / 9 for i in range(10)]
    tab = isoperimetric_profile(ks, grid, keyed_graph)
    assert g_convexity_defect(tab) >= -1e-8
    ks_samples = [k for k, _ in tab.g_samples]
    assert ks_samples == sorted(ks_samples)
