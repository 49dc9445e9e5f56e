import math

import pytest

from cheegerkit import domains
from cheegerkit.medial import build_medial
from cheegerkit.parallel import (dilate_region, disconnection_bands, erode,
                                 gamma2_empty_check, has_no_neck, inner_area,
                                 no_neck_profile)


def test_square_erosion(square_graph):
    st = erode(square_graph, 0.2)
    assert inner_area(st) == pytest.approx(0.36, abs=1e-12)
    assert len(st.interior_components) == 1
    assert not st.tendrils and not st.handles
    assert st.interior_components[0].perimeter() == pytest.approx(2.4,
                                                                  abs=1e-12)


def test_square_degenerates_to_center(square_graph):
    st = erode(square_graph, 0.5)
    assert not st.interior_components
    assert st.degenerate_point is not None
    assert abs(st.degenerate_point.x - 0.5) < 1e-12
    assert abs(st.degenerate_point.y - 0.5) < 1e-12
    assert has_no_neck(square_graph, 0.3)
    assert has_no_neck(square_graph, 0.5)


def test_rectangle_erosion(rect_graph):
    st = erode(rect_graph, 0.3)
    assert inner_area(st) == pytest.approx(1.4 * 0.4, abs=1e-12)
    st = erode(rect_graph, 0.5)
    # the inner body collapses onto the spine segment
    assert not st.interior_components
    assert st.degenerate_curve is not None
    assert st.degenerate_curve.length == pytest.approx(1.0, abs=1e-12)
    assert st.degenerate_curve.family is None


def test_keyed_tendril(keyed_graph):
    st = erode(keyed_graph, 0.1)
    assert len(st.interior_components) == 1
    assert inner_area(st) == pytest.approx(0.644292036732051034, abs=1e-12)
    assert len(st.tendrils) == 1 and not st.handles
    td = st.tendrils[0]
    assert td.length == pytest.approx(0.5, abs=1e-12)
    assert td.family == "gamma1"
    assert td.attached_start and not td.attached_end
    assert td.point_at(0.0).x == pytest.approx(1.0, abs=1e-9)
    assert td.point_at(1.0).x == pytest.approx(1.5, abs=1e-9)
    # the strip walls sit exactly one radius off the spine
    off = td.offset_at(0.5, +1)
    assert abs(abs(off.y - 0.5) - 0.1) < 1e-9
    assert gamma2_empty_check(st, keyed_graph) is True


def test_keyed_fat_dilation_closed_form(keyed_graph):
    st = erode(keyed_graph, 0.1)
    em = dilate_region(st.walks[0], keyed_graph.polygon.scale())
    assert em.area() == pytest.approx(1.007123889803846899, abs=1e-12)
    assert em.perimeter() == pytest.approx(3.942477796076937972, abs=1e-12)


def test_dumbbell_band(dumbbell_graph):
    bands = disconnection_bands(dumbbell_graph)
    assert len(bands) == 1
    lo, hi = bands[0]
    assert lo == pytest.approx(0.05, abs=1e-12)
    assert hi == pytest.approx(0.5, abs=1e-12)
    assert has_no_neck(dumbbell_graph, 0.05)
    assert not has_no_neck(dumbbell_graph, 0.06)
    prof = no_neck_profile(dumbbell_graph, samples=8)
    assert all(ok == (not 0.05 < r <= 0.5) for r, ok in prof)


def test_dumbbell_handle(dumbbell_graph):
    st = erode(dumbbell_graph, 0.2)
    assert len(st.interior_components) == 2 and not st.handles
    st = erode(dumbbell_graph, 0.05)
    assert len(st.interior_components) == 2
    assert len(st.handles) == 1
    assert st.handles[0].length == pytest.approx(0.5, abs=1e-12)
    assert st.handles[0].family == "gamma2"


def test_bridged_squares_handle():
    g = build_medial(domains.bridged_squares())
    st = erode(g, 0.1)
    assert len(st.interior_components) == 2 and len(st.handles) == 1
    assert st.handles[0].family == "gamma2"
    assert gamma2_empty_check(st, g) is False
    st_low = erode(g, 0.05)
    assert gamma2_empty_check(st_low, g) is True
    assert len(st_low.interior_components) == 1


def test_staircase_tendrils(staircase_graph):
    st = erode(staircase_graph, 0.25)
    assert len(st.tendrils) == 1
    assert st.tendrils[0].length == pytest.approx(0.25, abs=1e-12)
    st = erode(staircase_graph, 0.125)
    assert len(st.tendrils) == 1
    assert st.tendrils[0].length == pytest.approx(0.125, abs=1e-12)
    assert all(ok for _, ok in no_neck_profile(staircase_graph, samples=16))


def test_lshape_eroded_area_closed_form():
    g = build_medial(domains.l_shape())
    r = 0.2
    st = erode(g, r)
    # union of the two arm erosions plus the reflex-corner lune where
    # the boundary follows the radius-r arc around the reflex vertex
    a1 = (1 - 2 * r) * (1 - 2 * r)
    a2 = (2 - 2 * r) * (0.5 - 2 * r)
    ov = (1 - 2 * r) * (0.5 - 2 * r)
    lune = r * r * (1 - math.pi / 4)
    assert inner_area(st) == pytest.approx(a1 + a2 - ov + lune, abs=1e-12)


def test_720gon_eroded_area(gon720_graph):
    apo = math.cos(math.pi / 720)
    st = erode(gon720_graph, 0.25)
    # erosion of a regular polygon scales the apothem
    expect = ((apo - 0.25) / apo) ** 2 * 720 * math.sin(math.pi / 720) * apo
    assert inner_area(st) == pytest.approx(expect, rel=1e-9)
