import math

import pytest

from cheegerkit import domains
from cheegerkit.errors import (CharacterizationError, DomainError,
                               SubcriticalError, VolumeRangeError)
from cheegerkit.minimizers import (CurvatureProblem, interpolant,
                                   maximal_minimizer, minimal_minimizer,
                                   solve_for_volume,
                                   verify_minimizer_invariants)
from cheegerkit.raster import oracle_open, oracle_perimeter, rasterize

SQUARE_K5_VOLUME = 0.965663706143591730
SQUARE_K5_PERIMETER = 3.656637061435917295
KEYED_K10_VMIN = 1.007123889803846899
KEYED_K10_PMIN = 3.942477796076937972


def solved(poly, kappa, graph=None):
    pb = CurvatureProblem(poly, kappa, graph=graph)
    st = pb.structure()
    return pb, st, minimal_minimizer(pb, st), maximal_minimizer(pb, st)


def test_square_kappa5_closed_form(square_graph):
    pb, _, mn, mx = solved(domains.unit_square(), 5.0, square_graph)
    assert mx.volume == pytest.approx(SQUARE_K5_VOLUME, abs=1e-12)
    assert mx.perimeter == pytest.approx(SQUARE_K5_PERIMETER, abs=1e-12)
    assert mx.f_value == pytest.approx(
        SQUARE_K5_PERIMETER - 5.0 * SQUARE_K5_VOLUME, abs=1e-12)
    assert abs(mn.volume - mx.volume) < 1e-12
    arcs = [e for lp in mx.region.all_loops() for e in lp.edges if e.is_arc]
    assert len(arcs) == 4
    assert all(e.length() == pytest.approx(math.pi / 2 * 0.2, abs=1e-12)
               for e in arcs)


def test_square_functional_vanishes_at_cheeger(square_graph):
    h = 2.0 + math.sqrt(math.pi)
    _, _, _, mx = solved(domains.unit_square(), h, square_graph)
    assert abs(mx.f_value) <= 1e-9


@pytest.mark.parametrize("kappa", [2.0, 3.7])
def test_square_subcritical_rejected(square_graph, kappa):
    pb = CurvatureProblem(domains.unit_square(), kappa, graph=square_graph)
    with pytest.raises(SubcriticalError):
        maximal_minimizer(pb, pb.structure())


def test_keyed_kappa10_interval(keyed_graph):
    pb, st, mn, mx = solved(domains.keyed_square(), 10.0, keyed_graph)
    assert mn.volume == pytest.approx(KEYED_K10_VMIN, abs=1e-12)
    assert mx.volume == pytest.approx(KEYED_K10_VMIN + 0.1, abs=1e-12)
    assert mn.perimeter == pytest.approx(KEYED_K10_PMIN, abs=1e-12)
    assert mx.perimeter == pytest.approx(KEYED_K10_PMIN + 1.0, abs=1e-12)
    assert mx.f_value == pytest.approx(-6.128761101961531014, abs=1e-12)
    assert mn.f_value == pytest.approx(mx.f_value, rel=1e-9)


def test_keyed_family_affine_volume_constant_f(keyed_graph):
    pb, st, mn, mx = solved(domains.keyed_square(), 10.0, keyed_graph)
    for t in (0.0, 0.25, 0.5, 0.75, 1.0):
        a = interpolant(pb, st, t)
        assert a.volume == pytest.approx(mn.volume + 0.1 * t, abs=1e-12)
        assert a.f_value == pytest.approx(mx.f_value, rel=1e-9)
    assert verify_minimizer_invariants(interpolant(pb, st, 0.5), pb).ok


def test_keyed_solve_for_volume(keyed_graph):
    pb, st, mn, mx = solved(domains.keyed_square(), 10.0, keyed_graph)
    sv = solve_for_volume(pb, st, mn.volume + 0.05)
    assert sv.t == pytest.approx(0.5, abs=1e-6)
    assert solve_for_volume(pb, st, mn.volume).t == 0.0
    assert solve_for_volume(pb, st, mx.volume).t == pytest.approx(1.0,
                                                                  abs=1e-12)
    with pytest.raises(VolumeRangeError) as exc:
        solve_for_volume(pb, st, mx.volume + 0.01)
    assert exc.value.lo == pytest.approx(mn.volume, abs=1e-12)
    assert exc.value.hi == pytest.approx(mx.volume, abs=1e-12)
    with pytest.raises(DomainError):
        interpolant(pb, st, 1.2)


def test_720gon_whole_disk(gon720, gon720_graph):
    pb = CurvatureProblem(gon720, 2.5, graph=gon720_graph)
    mx = maximal_minimizer(pb, pb.structure())
    assert mx.volume == pytest.approx(math.pi, abs=1e-3)
    assert mx.f_value == pytest.approx(-math.pi / 2, abs=1e-2)
    assert verify_minimizer_invariants(mx, pb).ok


def test_dumbbell_neck_rejected(dumbbell_graph):
    pb = CurvatureProblem(domains.dumbbell(), 10.0, graph=dumbbell_graph)
    with pytest.raises(CharacterizationError) as exc:
        pb.structure()
        maximal_minimizer(pb, pb.structure())
    lo, hi = exc.value.band
    assert lo == pytest.approx(0.05, abs=1e-12)
    assert hi == pytest.approx(0.5, abs=1e-12)


def test_dumbbell_bridged_at_small_radius(dumbbell_graph):
    pb, st, mn, mx = solved(domains.dumbbell(), 20.0, dumbbell_graph)
    assert len(mn.core.regions) == 2 and len(mn.core.chains) == 1
    assert abs(mn.volume - mx.volume) < 1e-12  # no tendrils: unique
    assert len(mn.region.outer) == 1  # the handle joins both lobes
    assert verify_minimizer_invariants(mn, pb).ok
    arcs = [e for lp in mn.region.all_loops() for e in lp.edges if e.is_arc]
    assert all(abs(e.radius - 0.05) < 1e-12 for e in arcs)


def test_staircase_interval_gaps(staircase_graph):
    sc = domains.staircase()
    for kappa, ell in ((4.0, 0.25), (8.0, 0.125)):
        _, _, mn, mx = solved(sc, kappa, staircase_graph)
        assert mx.volume - mn.volume == pytest.approx(2 * ell / kappa,
                                                      abs=1e-12)


@pytest.mark.parametrize("make,kappas", [
    (domains.unit_square, (4.2, 6.0, 9.0)),
    (domains.rectangle, (4.2, 6.0, 9.0)),
    (domains.keyed_square, (4.2, 6.0, 10.0)),
    (domains.l_shape, (4.2, 6.0, 9.0)),
], ids=lambda v: getattr(v, "__name__", "k"))
def test_invariant_suite(make, kappas):
    poly = make()
    graph = None
    for kappa in kappas:
        pb = CurvatureProblem(poly, kappa, graph=graph)
        graph = pb.graph
        st = pb.structure()
        for mset in (minimal_minimizer(pb, st), maximal_minimizer(pb, st)):
            rep = verify_minimizer_invariants(mset, pb)
            assert rep.ok, rep.failures()


def test_nestedness_boundary_sampling(keyed_graph):
    # E^M at one curvature sits inside E^m at any larger curvature
    ks = domains.keyed_square()
    _, _, _, mx1 = solved(ks, 10.0, keyed_graph)
    _, _, mn2, _ = solved(ks, 10.0001, keyed_graph)
    pts = [lp.edges[i].point_at(0.3) for lp in mx1.region.outer
           for i in range(len(lp.edges))]
    assert all(mn2.region.contains_point(p, tol=1e-7) for p in pts)


def test_opened_area_matches_raster_oracle(keyed_graph):
    ks = domains.keyed_square()
    _, _, _, mx = solved(ks, 10.0, keyed_graph)
    mask = rasterize(ks, 800, r_max=0.1)
    opened = oracle_open(mask, 0.1)
    assert opened.area() == pytest.approx(mx.volume, rel=0.02)
    assert oracle_perimeter(opened) == pytest.approx(mx.perimeter, rel=0.03)
