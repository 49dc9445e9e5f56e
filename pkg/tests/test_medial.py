import math
import random

import pytest

from cheegerkit import domains
from cheegerkit.geometry import Point
from cheegerkit.medial import build_medial, clearance_at

ALL_FIXTURES = [
    domains.unit_square, domains.rectangle, domains.l_shape,
    domains.keyed_square, domains.dumbbell, domains.bridged_squares,
    domains.staircase, domains.equilateral_triangle,
]


@pytest.mark.parametrize("make", ALL_FIXTURES, ids=lambda f: f.__name__)
def test_axis_is_a_spanning_tree(make):
    # the medial axis of a simply connected domain is a tree
    g = build_medial(make())
    assert len(g.edges) == len(g.vertices) - 1
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for ei in g.adjacency[v]:
            w = g.edges[ei].other(v)
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    assert len(seen) == len(g.vertices)


@pytest.mark.parametrize("make", ALL_FIXTURES, ids=lambda f: f.__name__)
def test_edge_clearance_matches_boundary_distance(make):
    poly = make()
    g = build_medial(poly)
    worst = 0.0
    for e in g.edges:
        for t in (0.25, 0.5, 0.75):
            p = e.curve.point(t)
            worst = max(worst, abs(e.clearance(t) - poly.boundary_distance(p)))
    assert worst < 1e-9 * poly.scale()


def test_square_axis():
    g = build_medial(domains.unit_square())
    assert g.inradius == pytest.approx(0.5, abs=1e-12)
    center = [v for v in g.vertices if v.clearance > 0.49]
    assert len(center) == 1
    assert center[0].point.dist(Point(0.5, 0.5)) < 1e-12


def test_keyed_axis_combinatorics():
    g = build_medial(domains.keyed_square())
    assert (len(g.vertices), len(g.edges)) == (12, 11)
    assert g.inradius == pytest.approx(0.5, abs=1e-12)


def test_lshape_has_parabolic_edge():
    # reflex vertex against the far wall bends the bisector
    g = build_medial(domains.l_shape())
    kinds = {type(e.curve).__name__ for e in g.edges}
    assert "ParabolaCurve" in kinds


def test_triangle_inradius():
    g = build_medial(domains.equilateral_triangle())
    assert g.inradius == pytest.approx(math.sqrt(3) / 6, abs=1e-12)


def test_clearance_at_random_interior_points():
    rng = random.Random(7)
    for make in (domains.l_shape, domains.keyed_square, domains.dumbbell):
        poly = make()
        g = build_medial(poly)
        xmin, ymin, xmax, ymax = poly.bbox()
        checked = 0
        while checked < 120:
            p = Point(rng.uniform(xmin, xmax), rng.uniform(ymin, ymax))
            if not poly.contains_point(p, -1e-9):
                continue
            assert abs(clearance_at(g, p) - poly.boundary_distance(p)) <= 1e-12
            checked += 1


def test_critical_clearances_sorted_and_bounded():
    for make in ALL_FIXTURES:
        g = build_medial(make())
        crit = g.critical_clearances()
        assert crit == sorted(crit)
        assert all(0.0 < c <= g.inradius + 1e-15 for c in crit)
        assert crit[-1] == pytest.approx(g.inradius, abs=1e-15)


def test_720gon_inradius_is_apothem(gon720_graph):
    assert gon720_graph.inradius == pytest.approx(math.cos(math.pi / 720),
                                                  abs=1e-9)
