import math

import pytest

from cheegerkit import domains
from cheegerkit.errors import InputError
from cheegerkit.geometry import Point
from cheegerkit.polygon import JordanPolygon


def test_square_measures():
    sq = domains.unit_square()
    assert sq.area() == pytest.approx(1.0, abs=1e-15)
    assert sq.perimeter() == pytest.approx(4.0, abs=1e-15)
    assert sq.scale() == pytest.approx(math.sqrt(2.0), rel=1e-15)
    assert sq.bbox() == (0.0, 0.0, 1.0, 1.0)


def test_clockwise_input_reoriented():
    cw = JordanPolygon.from_coords([(0, 0), (0, 1), (1, 1), (1, 0)])
    ccw = JordanPolygon.from_coords([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert cw.area() > 0
    assert {(p.x, p.y) for p in cw.vertices} == {(p.x, p.y)
                                                 for p in ccw.vertices}


def test_duplicate_and_collinear_vertices_dropped():
    poly = JordanPolygon.from_coords(
        [(0, 0), (0.5, 0), (1, 0), (1, 0), (1, 1), (0, 1)])
    assert len(poly) == 4


def test_rejects_bad_input():
    with pytest.raises(InputError):
        JordanPolygon.from_coords([(0, 0), (1, 0)])
    with pytest.raises(InputError):
        JordanPolygon.from_coords([(0, 0), (1, 0), (float("nan"), 1)])
    with pytest.raises(InputError):
        JordanPolygon.from_coords([(0, 0), (1, 0), (2, 0)])  # zero area
    # bowtie self-intersection
    with pytest.raises(InputError):
        JordanPolygon.from_coords([(0, 0), (1, 1), (1, 0), (0, 1)])


def test_contains_and_boundary_distance():
    L = domains.l_shape()
    assert L.contains_point(Point(0.5, 0.25))
    assert not L.contains_point(Point(1.5, 0.75))
    assert L.boundary_distance(Point(0.5, 0.25)) == pytest.approx(0.25,
                                                                  abs=1e-12)
    # inside the low arm the notch ceiling is the nearest wall
    d = L.boundary_distance(Point(1.2, 0.3))
    assert d == pytest.approx(0.2, abs=1e-12)


def test_reflex_flags():
    L = domains.l_shape()
    assert sum(L.is_reflex()) == 1
    assert domains.unit_square().is_convex()
    assert not L.is_convex()


def test_fixture_areas():
    assert domains.rectangle().area() == pytest.approx(2.0, abs=1e-15)
    assert domains.l_shape().area() == pytest.approx(1.5, abs=1e-15)
    assert domains.keyed_square().area() == pytest.approx(1.12, abs=1e-15)
    assert domains.dumbbell().area() == pytest.approx(2.05, abs=1e-15)
    tri = domains.equilateral_triangle()
    assert tri.area() == pytest.approx(math.sqrt(3) / 4, rel=1e-15)
    gon = domains.regular_polygon(720, 1.0)
    assert gon.area() == pytest.approx(360 * math.sin(math.pi / 360),
                                       rel=1e-12)
    assert gon.area() == pytest.approx(math.pi, rel=2e-5)
